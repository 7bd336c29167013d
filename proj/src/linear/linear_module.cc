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

#include "nilorb/linear/linear_module.h"

#include <algorithm>

#include "nilorb/perm/errors.h"

namespace nilorb {

namespace {

std::uint64_t checked_space_size(std::uint32_t p, std::size_t dim) {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        q *= p;
        if (q > kMaxPoints) {
            throw CapExceeded("vector space " + std::to_string(p) + "^" + std::to_string(dim) + " exceeds 2^20 points");
        }
    }
    return q;
}

}  // namespace

Matrix Matrix::identity(std::uint32_t p, std::size_t dim) {
    Matrix m{p, dim, std::vector<std::uint32_t>(dim * dim, 0)};
    for (std::size_t i = 0; i < dim; ++i) {
        m.at(i, i) = 1 % p;
    }
    return m;
}

Matrix Matrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
    if (!is_prime(p)) {
        throw InvalidArgument("matrix characteristic " + std::to_string(p) + " is not prime");
    }
    Matrix m{p, rows.size(), {}};
    for (const auto& row : rows) {
        if (row.size() != rows.size()) {
            throw InvalidArgument("matrix must be square");
        }
        for (std::int64_t x : row) {
            std::int64_t r = x % static_cast<std::int64_t>(p);
            m.entries.push_back(static_cast<std::uint32_t>(r < 0 ? r + p : r));
        }
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (p != other.p || dim != other.dim) {
        throw InvalidArgument("matrix shapes or fields differ");
    }
    Matrix out{p, dim, std::vector<std::uint32_t>(dim * dim, 0)};
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            std::uint64_t a = at(i, k);
            if (!a) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                out.at(i, j) = static_cast<std::uint32_t>((out.at(i, j) + a * other.at(k, j)) % p);
            }
        }
    }
    return out;
}

std::size_t Matrix::rank() const {
    std::vector<std::uint32_t> m = entries;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < dim; ++col) {
        std::size_t pivot = rank;
        while (pivot < dim && m[pivot * dim + col] == 0) {
            ++pivot;
        }
        if (pivot == dim) {
            continue;
        }
        for (std::size_t j = 0; j < dim; ++j) {
            std::swap(m[pivot * dim + j], m[rank * dim + j]);
        }
        std::uint64_t inv = 1;
        for (std::uint64_t x = 1; x < p; ++x) {
            if (x * m[rank * dim + col] % p == 1) {
                inv = x;
                break;
            }
        }
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == rank || m[r * dim + col] == 0) {
                continue;
            }
            std::uint64_t f = m[r * dim + col] * inv % p;
            for (std::size_t j = 0; j < dim; ++j) {
                m[r * dim + j] = static_cast<std::uint32_t>((m[r * dim + j] + p * p - f * m[rank * dim + j]) % p);
            }
        }
        ++rank;
    }
    return rank;
}

Permutation matrix_permutation(const Matrix& a) {
    const std::uint32_t p = a.p;
    const std::size_t d = a.dim;
    std::uint64_t q = checked_space_size(p, d);
    std::vector<std::uint32_t> v(d);
    std::vector<std::uint64_t> w(d);
    std::vector<Point> images(q);
    for (std::uint64_t x = 0; x < q; ++x) {
        std::uint64_t t = x;
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = t % p;
            t /= p;
        }
        std::fill(w.begin(), w.end(), 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (!v[i]) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                w[j] += static_cast<std::uint64_t>(v[i]) * a.at(i, j);
            }
        }
        std::uint64_t y = 0;
        for (std::size_t j = d; j-- > 0;) {
            y = y * p + w[j] % p;
        }
        images[x] = static_cast<Point>(y);
    }
    return Permutation::from_images(std::move(images));
}

Matrix semilinear_matrix(const GaloisField& field, const SemilinearMap& map) {
    const std::uint32_t p = field.characteristic();
    const std::size_t k = field.degree();
    Matrix m{p, k, std::vector<std::uint32_t>(k * k, 0)};
    std::uint32_t basis = 1;
    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t image = map.apply(field, basis);
        for (std::size_t j = 0; j < k; ++j) {
            m.at(i, j) = image % p;
            image /= p;
        }
        basis *= p;
    }
    return m;
}

Matrix multiplication_matrix(const GaloisField& field, std::uint32_t a) {
    return semilinear_matrix(field, SemilinearMap{a, 0});
}

std::uint64_t Summand::size() const { return checked_space_size(characteristic, dimension); }

LinearModule::LinearModule(std::vector<Summand> summands, PermutationGroup acting_group)
    : summands_(std::move(summands)), group_(std::move(acting_group)) {
    for (const auto& s : summands_) {
        if (!is_prime(s.characteristic)) {
            throw InvalidArgument("summand characteristic " + std::to_string(s.characteristic) + " is not prime");
        }
        for (std::size_t i = 0; i < s.dimension; ++i) {
            radix_.push_back(s.characteristic);
            size_ *= s.characteristic;
            if (size_ > kMaxPoints) {
                throw CapExceeded("module exceeds 2^20 points");
            }
        }
    }
    if (group_.degree() != size_) {
        throw InvalidArgument("acting group degree " + std::to_string(group_.degree()) +
                              " does not match the module size " + std::to_string(size_));
    }
    for (const auto& g : group_.generators()) {
        if (!is_additive(g)) {
            throw InvalidArgument("acting generator is not additive on the module");
        }
    }
}

std::size_t LinearModule::dimension() const { return radix_.size(); }

bool LinearModule::is_mixed() const {
    return std::any_of(summands_.begin(), summands_.end(), [&](const Summand& s) {
        return s.dimension > 0 && s.characteristic != summands_.front().characteristic;
    });
}

std::uint32_t LinearModule::characteristic() const {
    std::uint32_t p = 0;
    for (const auto& s : summands_) {
        if (s.dimension == 0) {
            continue;
        }
        if (p != 0 && s.characteristic != p) {
            throw InvalidArgument("mixed-characteristic module has no single characteristic");
        }
        p = s.characteristic;
    }
    if (p == 0) {
        return summands_.empty() ? 2 : summands_.front().characteristic;
    }
    return p;
}

std::vector<std::uint32_t> LinearModule::decode(Point v) const {
    std::vector<std::uint32_t> coords(radix_.size());
    for (std::size_t i = 0; i < radix_.size(); ++i) {
        coords[i] = v % radix_[i];
        v /= radix_[i];
    }
    return coords;
}

Point LinearModule::encode(std::span<const std::uint32_t> coords) const {
    if (coords.size() != radix_.size()) {
        throw InvalidArgument("coordinate count does not match the module dimension");
    }
    std::uint64_t v = 0;
    for (std::size_t i = radix_.size(); i-- > 0;) {
        v = v * radix_[i] + coords[i] % radix_[i];
    }
    return static_cast<Point>(v);
}

Point LinearModule::add(Point u, Point v) const {
    std::uint64_t out = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t r : radix_) {
        out += ((u % r + v % r) % r) * scale;
        u /= r;
        v /= r;
        scale *= r;
    }
    return static_cast<Point>(out);
}

std::vector<Point> LinearModule::basis() const {
    std::vector<Point> out;
    std::uint64_t scale = 1;
    for (std::uint32_t r : radix_) {
        out.push_back(static_cast<Point>(scale));
        scale *= r;
    }
    return out;
}

bool LinearModule::is_additive(const Permutation& g) const {
    if (g.degree() != size_ || g[0] != 0) {
        return false;
    }
    for (Point b : basis()) {
        Point gb = g[b];
        for (Point u = 0; u < size_; ++u) {
            if (g[add(u, b)] != add(g[u], gb)) {
                return false;
            }
        }
    }
    return true;
}

LinearModule make_linear_action(std::uint32_t p, std::size_t dim, std::span<const Matrix> generators) {
    std::uint64_t q = checked_space_size(p, dim);
    std::vector<Permutation> perms;
    for (const auto& m : generators) {
        if (m.p != p || m.dim != dim || m.entries.size() != dim * dim) {
            throw InvalidArgument("matrix does not match the module's field or dimension");
        }
        if (!m.is_invertible()) {
            throw InvalidArgument("singular matrix generator");
        }
        perms.push_back(matrix_permutation(m));
    }
    if (perms.empty()) {
        perms.emplace_back(static_cast<std::size_t>(q));
    }
    return LinearModule({Summand{p, dim}}, PermutationGroup::build(std::move(perms)));
}

LinearModule gamma_module(std::uint32_t p, std::uint32_t k, bool gamma0_only) {
    GammaGroups g = make_gamma(p, k);
    return LinearModule({Summand{p, k}}, gamma0_only ? g.gamma0 : g.gamma);
}

std::uint64_t fixed_vector_count(const LinearModule& module, const Permutation& g) {
    if (!module.is_additive(g)) {
        throw InvalidArgument("fixed_vector_count needs an additive permutation of the module");
    }
    std::uint64_t count = 0;
    for (Point v = 0; v < module.size(); ++v) {
        count += g[v] == v;
    }
    return count;
}

PermutationGroup centralizer_of_vector(const PermutationGroup& group, Point v) { return group.point_stabilizer(v); }

namespace {

// Points of the sum, decomposed into component points.
struct SumLayout {
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint64_t> strides;
    std::uint64_t total = 1;

    explicit SumLayout(std::span<const LinearModule> modules) {
        for (const auto& m : modules) {
            strides.push_back(total);
            sizes.push_back(m.size());
            total *= m.size();
            if (total > kMaxPoints) {
                throw CapExceeded("direct sum exceeds 2^20 points");
            }
        }
    }

    Point component(std::uint64_t x, std::size_t i) const { return static_cast<Point>(x / strides[i] % sizes[i]); }
};

// Acts by gens[i] on component i; a null entry leaves that component alone.
Permutation componentwise(const SumLayout& layout, const std::vector<const Permutation*>& gens) {
    std::vector<Point> images(layout.total);
    for (std::uint64_t x = 0; x < layout.total; ++x) {
        std::uint64_t y = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Point c = layout.component(x, i);
            y += (gens[i] ? (*gens[i])[c] : c) * layout.strides[i];
        }
        images[x] = static_cast<Point>(y);
    }
    return Permutation::from_images(std::move(images));
}

// Moves component i to position sigma[i].
Permutation block_permutation(const SumLayout& layout, const std::vector<std::size_t>& sigma) {
    std::vector<Point> images(layout.total);
    for (std::uint64_t x = 0; x < layout.total; ++x) {
        std::uint64_t y = 0;
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            y += layout.component(x, i) * layout.strides[sigma[i]];
        }
        images[x] = static_cast<Point>(y);
    }
    return Permutation::from_images(std::move(images));
}

}  // namespace

LinearModule direct_sum_module(std::span<const LinearModule> modules, SumAction action) {
    if (modules.empty()) {
        throw InvalidArgument("direct sum of no modules");
    }
    SumLayout layout(modules);
    std::vector<Summand> summands;
    for (const auto& m : modules) {
        summands.insert(summands.end(), m.summands().begin(), m.summands().end());
    }
    const std::size_t count = modules.size();
    std::vector<Permutation> gens;

    auto push_factor_generators = [&]() {
        for (std::size_t i = 0; i < count; ++i) {
            for (const auto& g : modules[i].acting_group().generators()) {
                if (g.is_identity()) {
                    continue;
                }
                std::vector<const Permutation*> slot(count, nullptr);
                slot[i] = &g;
                gens.push_back(componentwise(layout, slot));
            }
        }
    };

    switch (action) {
        case SumAction::kDirectProduct:
            push_factor_generators();
            break;
        case SumAction::kDiagonal: {
            std::size_t n = modules[0].acting_group().generators().size();
            for (const auto& m : modules) {
                if (m.acting_group().generators().size() != n) {
                    throw InvalidArgument("diagonal action needs equal generator counts");
                }
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<const Permutation*> slot;
                for (const auto& m : modules) {
                    slot.push_back(&m.acting_group().generators()[j]);
                }
                gens.push_back(componentwise(layout, slot));
            }
            break;
        }
        case SumAction::kWreath: {
            for (const auto& m : modules) {
                if (m.summands() != modules[0].summands() ||
                    m.acting_group().generators() != modules[0].acting_group().generators()) {
                    throw InvalidArgument("wreath action needs identical modules");
                }
            }
            push_factor_generators();
            if (count >= 2) {
                std::vector<std::size_t> swap(count), cycle(count);
                for (std::size_t i = 0; i < count; ++i) {
                    swap[i] = i;
                    cycle[i] = (i + 1) % count;
                }
                std::swap(swap[0], swap[1]);
                gens.push_back(block_permutation(layout, swap));
                if (count > 2) {
                    gens.push_back(block_permutation(layout, cycle));
                }
            }
            break;
        }
    }
    if (gens.empty()) {
        gens.emplace_back(static_cast<std::size_t>(layout.total));
    }
    return LinearModule(std::move(summands), PermutationGroup::build(std::move(gens)));
}

LinearModule module_from_json(const nlohmann::json& j) {
    try {
        auto p = j.at("p").get<std::uint32_t>();
        auto d = j.at("d").get<std::size_t>();
        std::vector<Matrix> mats;
        for (const auto& rows : j.at("matrices")) {
            Matrix m = Matrix::from_rows(p, rows.get<std::vector<std::vector<std::int64_t>>>());
            if (m.dim != d) {
                throw InvalidArgument("matrix dimension differs from d");
            }
            mats.push_back(std::move(m));
        }
        return make_linear_action(p, d, mats);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed module description: ") + e.what());
    }
}

nlohmann::json matrices_to_json(std::uint32_t p, std::size_t dim, std::span<const Matrix> matrices) {
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& m : matrices) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < m.dim; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < m.dim; ++c) {
                row.push_back(m.at(r, c));
            }
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    return {{"d", dim}, {"matrices", std::move(mats)}, {"p", p}};
}

}  // namespace nilorb
