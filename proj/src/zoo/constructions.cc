// Copyright 2026 The nilorb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nilorb/zoo/constructions.h"

#include "nilorb/linear/field.h"
#include "nilorb/perm/errors.h"

namespace nilorb {

namespace {

// Representatives of the orbits of `s` on {0, ..., b-1}.
std::vector<Point> orbit_representatives(std::span<const Permutation> s, std::size_t b) {
    std::vector<char> seen(b, 0);
    std::vector<Point> reps;
    for (Point x = 0; x < b; ++x) {
        if (seen[x]) {
            continue;
        }
        reps.push_back(x);
        std::vector<Point> queue{x};
        seen[x] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (const auto& g : s) {
                Point y = g[queue[i]];
                if (!seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
            }
        }
    }
    return reps;
}

}  // namespace

PermutationGroup wreath_product(const PermutationGroup& h, const PermutationGroup& s) {
    const std::size_t a = h.degree();
    const std::size_t b = s.degree();
    if (a * b > kMaxPoints) {
        throw CapExceeded("wreath product degree exceeds 2^20");
    }
    std::vector<Permutation> gens;
    for (Point block : orbit_representatives(s.generators(), b)) {
        for (const auto& g : h.generators()) {
            std::vector<Point> img(a * b);
            for (Point x = 0; x < a * b; ++x) {
                img[x] = x / a == block ? static_cast<Point>(block * a + g[x % a]) : x;
            }
            gens.push_back(Permutation::from_images(std::move(img)));
        }
    }
    for (const auto& sigma : s.generators()) {
        std::vector<Point> img(a * b);
        for (Point x = 0; x < a * b; ++x) {
            img[x] = static_cast<Point>(sigma[x / a] * a + x % a);
        }
        gens.push_back(Permutation::from_images(std::move(img)));
    }
    return PermutationGroup::build(std::move(gens));
}

PermutationGroup symmetric_group(std::size_t n) {
    if (n == 1) {
        return PermutationGroup::trivial(1);
    }
    std::vector<Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i) {
        cycle[i] = static_cast<Point>((i + 1) % n);
    }
    return PermutationGroup::build({Permutation::from_cycles(n, {{0, 1}}), Permutation::from_images(cycle)});
}

std::vector<Matrix> general_linear_generators(std::uint32_t p, std::size_t d) {
    if (d == 0) {
        throw InvalidArgument("GL(0,p) has no generators");
    }
    GaloisField prime_field(make_field(p, 1));
    std::vector<Matrix> gens;
    Matrix diag = Matrix::identity(p, d);
    diag.at(0, 0) = prime_field.primitive_element();
    if (p > 2) {
        gens.push_back(diag);
    }
    if (d >= 2) {
        Matrix t = Matrix::identity(p, d);
        t.at(0, 1) = 1;
        gens.push_back(t);
        Matrix c{p, d, std::vector<std::uint32_t>(d * d, 0)};
        for (std::size_t i = 0; i < d; ++i) {
            c.at(i, (i + 1) % d) = 1;
        }
        gens.push_back(c);
    }
    if (gens.empty()) {
        gens.push_back(Matrix::identity(p, d));
    }
    return gens;
}

BigInt general_linear_order(std::uint32_t p, std::size_t d) {
    BigInt q = big_pow(p, d);
    BigInt order = 1;
    BigInt pi = 1;
    for (std::size_t i = 0; i < d; ++i) {
        order *= q - pi;
        pi *= p;
    }
    return order;
}

std::vector<Matrix> semilinear_generators(std::uint32_t p, std::size_t d) {
    GaloisField f(make_field(p, static_cast<std::uint32_t>(d)));
    std::vector<Matrix> gens{multiplication_matrix(f, f.primitive_element())};
    if (d > 1) {
        gens.push_back(semilinear_matrix(f, SemilinearMap{1, 1}));
    }
    return gens;
}

std::vector<Matrix> linear_wreath(std::span<const Matrix> h, std::span<const Permutation> s) {
    if (h.empty() || s.empty()) {
        throw InvalidArgument("linear wreath product needs generators for both factors");
    }
    const std::uint32_t p = h.front().p;
    const std::size_t a = h.front().dim;
    const std::size_t b = s.front().degree();
    const std::size_t n = a * b;
    std::vector<Matrix> gens;
    for (Point block : orbit_representatives(s, b)) {
        for (const auto& m : h) {
            Matrix g = Matrix::identity(p, n);
            for (std::size_t i = 0; i < a; ++i) {
                for (std::size_t j = 0; j < a; ++j) {
                    g.at(block * a + i, block * a + j) = m.at(i, j);
                }
            }
            gens.push_back(std::move(g));
        }
    }
    for (const auto& sigma : s) {
        Matrix g{p, n, std::vector<std::uint32_t>(n * n, 0)};
        for (std::size_t r = 0; r < n; ++r) {
            g.at(r, sigma[static_cast<Point>(r / a)] * a + r % a) = 1;
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

Matrix matrix_of(const Permutation& g, std::uint32_t p, std::size_t d) {
    Matrix m{p, d, std::vector<std::uint32_t>(d * d, 0)};
    std::uint64_t unit = 1;
    for (std::size_t i = 0; i < d; ++i) {
        Point image = g[static_cast<Point>(unit)];
        for (std::size_t j = 0; j < d; ++j) {
            m.at(i, j) = image % p;
            image /= p;
        }
        unit *= p;
    }
    if (matrix_permutation(m) != g) {
        throw InvalidArgument("permutation is not linear on GF(p)^d");
    }
    return m;
}

Permutation translation(std::uint32_t p, std::size_t d, Point t) {
    LinearModule v({Summand{p, d}}, PermutationGroup::trivial(Summand{p, d}.size()));
    std::vector<Point> img(v.size());
    for (Point x = 0; x < v.size(); ++x) {
        img[x] = v.add(x, t);
    }
    return Permutation::from_images(std::move(img));
}

PermutationGroup affine_group(std::uint32_t p, std::size_t d, std::span<const Matrix> matrices) {
    std::vector<Permutation> gens;
    std::uint64_t unit = 1;
    for (std::size_t i = 0; i < d; ++i) {
        gens.push_back(translation(p, d, static_cast<Point>(unit)));
        unit *= p;
    }
    for (const auto& m : matrices) {
        Permutation g = matrix_permutation(m);
        if (!g.is_identity()) {
            gens.push_back(std::move(g));
        }
    }
    return PermutationGroup::build(std::move(gens));
}

std::size_t vector_rank(std::uint32_t p, std::size_t d, std::span<const Point> vectors) {
    std::vector<std::uint32_t> rows;
    std::size_t count = 0;
    for (Point v : vectors) {
        for (std::size_t j = 0; j < d; ++j) {
            rows.push_back(v % p);
            v /= p;
        }
        ++count;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < count; ++col) {
        std::size_t pivot = rank;
        while (pivot < count && rows[pivot * d + col] == 0) {
            ++pivot;
        }
        if (pivot == count) {
            continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
            std::swap(rows[pivot * d + j], rows[rank * d + j]);
        }
        std::uint64_t inv = 1;
        while (inv * rows[rank * d + col] % p != 1) {
            ++inv;
        }
        for (std::size_t r = rank + 1; r < count; ++r) {
            std::uint64_t f = rows[r * d + col] * inv % p;
            if (!f) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                rows[r * d + j] = static_cast<std::uint32_t>((rows[r * d + j] + p * p - f * rows[rank * d + j]) % p);
            }
        }
        ++rank;
    }
    return rank;
}

bool acts_irreducibly(const PermutationGroup& group, std::uint32_t p, std::size_t d) {
    if (d == 0) {
        return false;
    }
    for (const auto& orbit : orbit_partition(group)) {
        if (orbit.front() == 0) {
            continue;
        }
        if (vector_rank(p, d, orbit) != d) {
            return false;
        }
    }
    return true;
}

bool acts_irreducibly(std::uint32_t p, std::size_t d, std::span<const Matrix> matrices) {
    return acts_irreducibly(make_linear_action(p, d, matrices).acting_group(), p, d);
}

}  // namespace nilorb
