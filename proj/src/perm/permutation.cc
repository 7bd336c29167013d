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

#include "nilorb/perm/permutation.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "nilorb/perm/bigint.h"
#include "nilorb/perm/errors.h"

namespace nilorb {

Permutation::Permutation(std::size_t degree) : images_(degree) {
    for (std::size_t i = 0; i < degree; ++i) {
        images_[i] = static_cast<Point>(i);
    }
}

Permutation Permutation::from_images(std::vector<Point> images) {
    if (images.empty()) {
        throw InvalidArgument("permutation must have positive degree");
    }
    std::vector<bool> seen(images.size(), false);
    for (Point x : images) {
        if (x >= images.size() || seen[x]) {
            throw InvalidArgument("image list is not a bijection");
        }
        seen[x] = true;
    }
    return Permutation(std::move(images), true);
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    Permutation p(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            Point a = cycle[i];
            if (a >= degree || used[a]) {
                throw InvalidArgument("cycles are not disjoint or exceed the degree");
            }
            used[a] = true;
            p.images_[a] = cycle[(i + 1) % cycle.size()];
        }
    }
    return p;
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<Point> images;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) {
            ++i;
        }
        if (i >= text.size()) {
            break;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' && text[j] != '\r') {
            ++j;
        }
        Point value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
        if (ec != std::errc() || ptr != text.data() + j) {
            throw InvalidArgument("bad permutation token '" + std::string(text.substr(i, j - i)) + "'");
        }
        images.push_back(value);
        i = j;
    }
    return from_images(std::move(images));
}

std::string Permutation::to_string() const {
    std::string out;
    out.reserve(images_.size() * 3);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) {
            out.push_back(' ');
        }
        out += std::to_string(images_[i]);
    }
    return out;
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    bool any = false;
    for (Point start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == start) {
            continue;
        }
        any = true;
        os << '(';
        Point x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) {
                os << ',';
            }
            os << x;
            first = false;
            x = images_[x];
        }
        os << ')';
    }
    if (!any) {
        return "()";
    }
    return os.str();
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[images_[i]] = static_cast<Point>(i);
    }
    return Permutation(std::move(inv), true);
}

Permutation Permutation::pow(std::int64_t e) const {
    Permutation base = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    Permutation result(images_.size());
    while (k) {
        if (k & 1) {
            result = result * base;
        }
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::optional<Point> Permutation::smallest_moved_point() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
            return static_cast<Point>(i);
        }
    }
    return std::nullopt;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
        throw InvalidArgument("degree mismatch in permutation product");
    }
    std::vector<Point> out(a.images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = b.images_[a.images_[i]];
    }
    return Permutation(std::move(out), true);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
    return a.inverse() * b.inverse() * a * b;
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
    return g.inverse() * x * g;
}

CycleStats cycle_stats(const Permutation& g) {
    CycleStats stats;
    std::vector<bool> seen(g.degree(), false);
    for (Point start = 0; start < g.degree(); ++start) {
        if (seen[start]) {
            continue;
        }
        std::uint64_t len = 0;
        Point x = start;
        while (!seen[x]) {
            seen[x] = true;
            x = g[x];
            ++len;
        }
        ++stats.cycle_count;
        if (len == 1) {
            ++stats.fixed_points;
        }
        stats.element_order = checked_lcm(stats.element_order, len);
    }
    return stats;
}

std::vector<std::size_t> cycle_type(const Permutation& g) {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(g.degree(), false);
    for (Point start = 0; start < g.degree(); ++start) {
        if (seen[start]) {
            continue;
        }
        std::size_t len = 0;
        for (Point x = start; !seen[x]; x = g[x]) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace nilorb
