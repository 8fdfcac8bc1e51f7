#ifndef MULTIFLAG_MODEL_HPP
#define MULTIFLAG_MODEL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "matrix.hpp"

namespace multiflag {

/*
 * A point of projective space, stored with its first nonzero coordinate
 * normalized to 1 so that structural equality is projective equality.
 */
template <class K>
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<K> coords) : c_(std::move(coords)) {
        std::size_t first = c_.size();
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) { first = i; break; }
        if (first == c_.size())
            throw field_error("ZeroVector", "projective point from zero vector");
        K inv = c_[first].multiplicative_identity() / c_[first];
        for (auto& x : c_) x = x * inv;
    }

    std::size_t dim() const { return c_.size(); }
    const std::vector<K>& coords() const { return c_; }

    bool operator==(const ProjectivePoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }

private:
    std::vector<K> c_;
};

/*
 * m lines through the origin of K^n, each a normalized nonzero vector.
 */
template <class K>
class Configuration {
public:
    Configuration(std::size_t n, std::vector<ProjectivePoint<K>> lines)
        : n_(n), lines_(std::move(lines)) {
        if (n_ < 1) throw field_error("BadDimension", "ambient dimension must be >= 1");
        if (lines_.empty()) throw field_error("BadDimension", "at least one line required");
        for (const auto& l : lines_)
            if (l.dim() != n_) throw field_error("ShapeMismatch", "line dimension != ambient");
    }

    std::size_t n() const { return n_; }
    std::size_t m() const { return lines_.size(); }
    const std::vector<ProjectivePoint<K>>& lines() const { return lines_; }
    const ProjectivePoint<K>& line(std::size_t i) const { return lines_[i]; }

    // new configuration with lines t * v_i (t must be invertible)
    Configuration transformed(const Matrix<K>& t) const {
        std::vector<ProjectivePoint<K>> out;
        out.reserve(lines_.size());
        for (const auto& l : lines_) out.emplace_back(t.apply(l.coords()));
        return Configuration(n_, std::move(out));
    }

    bool operator==(const Configuration& o) const { return n_ == o.n_ && lines_ == o.lines_; }

private:
    std::size_t n_;
    std::vector<ProjectivePoint<K>> lines_;
};

/*
 * An m-tuple flag with subspaces of dimension <= 1: each entry is either the
 * zero subspace or a line of the ambient K^r.
 */
template <class K>
class TupleFlag {
public:
    TupleFlag(std::size_t ambient, std::vector<std::optional<ProjectivePoint<K>>> entries)
        : r_(ambient), entries_(std::move(entries)) {
        for (const auto& e : entries_)
            if (e && e->dim() != r_) throw field_error("ShapeMismatch", "flag entry dimension");
    }

    std::size_t ambient() const { return r_; }
    std::size_t m() const { return entries_.size(); }
    const std::vector<std::optional<ProjectivePoint<K>>>& entries() const { return entries_; }

    Configuration<K> to_configuration() const {
        std::vector<ProjectivePoint<K>> lines;
        for (const auto& e : entries_) {
            if (!e) throw field_error("ZeroEntry", "flag has a zero entry; not a configuration");
            lines.push_back(*e);
        }
        return Configuration<K>(r_, std::move(lines));
    }

    bool operator==(const TupleFlag& o) const { return r_ == o.r_ && entries_ == o.entries_; }

private:
    std::size_t r_;
    std::vector<std::optional<ProjectivePoint<K>>> entries_;
};

/*
 * (r; d^(1),...,d^(m)) with d^(i) in {0,1}.
 */
struct DimensionVector {
    std::size_t r = 0;
    std::vector<int> entries;  // 0/1 per position

    DimensionVector() = default;
    DimensionVector(std::size_t size, std::vector<int> e) : r(size), entries(std::move(e)) {
        for (int d : entries) {
            if (d != 0 && d != 1) throw field_error("BadDimensionVector", "entries must be 0/1");
            if (static_cast<std::size_t>(d) > r)
                throw field_error("BadDimensionVector", "entry exceeds ambient size");
        }
    }

    // d(K, r) for a 1-based index set K
    static DimensionVector of_support(const std::set<int>& k, std::size_t rank, std::size_t m) {
        std::vector<int> e(m, 0);
        for (int i : k) e[static_cast<std::size_t>(i) - 1] = 1;
        return DimensionVector(rank, std::move(e));
    }

    std::set<int> support() const {
        std::set<int> s;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i]) s.insert(static_cast<int>(i) + 1);
        return s;
    }

    DimensionVector operator+(const DimensionVector& o) const {
        if (entries.size() != o.entries.size())
            throw field_error("ShapeMismatch", "dimension vector length");
        DimensionVector out;
        out.r = r + o.r;
        out.entries.resize(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) out.entries[i] = entries[i] + o.entries[i];
        return out;
    }

    auto operator<=>(const DimensionVector&) const = default;
};

template <class K>
DimensionVector dimension_vector(const TupleFlag<K>& f) {
    std::vector<int> e;
    e.reserve(f.m());
    for (const auto& entry : f.entries()) e.push_back(entry ? 1 : 0);
    return DimensionVector(f.ambient(), std::move(e));
}

// --- representative builders -------------------------------------------------

namespace detail {
template <class K>
std::vector<K> unit_vector(std::size_t dim, std::size_t pos, const K& like) {
    std::vector<K> v(dim, like.additive_identity());
    v[pos] = like.multiplicative_identity();
    return v;
}
}  // namespace detail

/*
 * F(I): ambient dimension 1, the full line at positions of I, zero elsewhere.
 * Indices are 1-based.
 */
template <class K>
TupleFlag<K> build_F(const std::set<int>& I, std::size_t m, const K& like) {
    std::vector<std::optional<ProjectivePoint<K>>> entries(m);
    for (int i : I) {
        if (i < 1 || static_cast<std::size_t>(i) > m)
            throw field_error("IndexOutOfRange", "index outside {1..m}");
        entries[static_cast<std::size_t>(i) - 1] =
            ProjectivePoint<K>({like.multiplicative_identity()});
    }
    return TupleFlag<K>(1, std::move(entries));
}

/*
 * D(J): ambient K^{|J|-1}; for J = {j_1 < ... < j_{r+1}} the first r positions
 * carry the standard basis lines and the last carries K(e_1 + ... + e_r).
 */
template <class K>
TupleFlag<K> build_D(const std::set<int>& J, std::size_t m, const K& like) {
    if (J.size() < 3) throw field_error("BlockTooSmall", "D block needs at least 3 indices");
    const std::size_t r = J.size() - 1;
    std::vector<std::optional<ProjectivePoint<K>>> entries(m);
    std::size_t h = 0;
    for (int j : J) {
        if (j < 1 || static_cast<std::size_t>(j) > m)
            throw field_error("IndexOutOfRange", "index outside {1..m}");
        std::vector<K> v;
        if (h < r) {
            v = detail::unit_vector(r, h, like);
        } else {
            v.assign(r, like.multiplicative_identity());
        }
        entries[static_cast<std::size_t>(j) - 1] = ProjectivePoint<K>(std::move(v));
        ++h;
    }
    return TupleFlag<K>(r, std::move(entries));
}

/*
 * E(K, r, q): like D on the first r+1 sorted elements of the block, with the
 * remaining positions carrying the moduli points q in P^{r-1}.
 */
template <class K>
TupleFlag<K> build_E(const std::set<int>& block, std::size_t r,
                     const std::vector<ProjectivePoint<K>>& q, std::size_t m, const K& like) {
    if (!(4 <= r + 2 && r + 2 <= block.size()))
        throw field_error("RankOutOfRange", "need 4 <= r+2 <= |K|");
    if (q.size() != block.size() - r - 1)
        throw field_error("QLengthMismatch", "expected |K|-r-1 moduli points");
    for (const auto& pt : q)
        if (pt.dim() != r) throw field_error("QLengthMismatch", "moduli point not in P^{r-1}");
    std::vector<std::optional<ProjectivePoint<K>>> entries(m);
    std::size_t h = 0;
    for (int i : block) {
        if (i < 1 || static_cast<std::size_t>(i) > m)
            throw field_error("IndexOutOfRange", "index outside {1..m}");
        std::vector<K> v;
        if (h < r) {
            v = detail::unit_vector(r, h, like);
            entries[static_cast<std::size_t>(i) - 1] = ProjectivePoint<K>(std::move(v));
        } else if (h == r) {
            v.assign(r, like.multiplicative_identity());
            entries[static_cast<std::size_t>(i) - 1] = ProjectivePoint<K>(std::move(v));
        } else {
            entries[static_cast<std::size_t>(i) - 1] = q[h - r - 1];
        }
        ++h;
    }
    return TupleFlag<K>(r, std::move(entries));
}

/*
 * Block-coordinate direct sum: ambient dimensions add, the left summand
 * occupies the leading coordinates. At most one summand may have a nonzero
 * entry at each position.
 */
template <class K>
TupleFlag<K> direct_sum(const TupleFlag<K>& f, const TupleFlag<K>& g) {
    if (f.m() != g.m()) throw field_error("ShapeMismatch", "direct sum needs equal m");
    const std::size_t rf = f.ambient(), rg = g.ambient();
    std::vector<std::optional<ProjectivePoint<K>>> entries(f.m());
    for (std::size_t i = 0; i < f.m(); ++i) {
        const auto& a = f.entries()[i];
        const auto& b = g.entries()[i];
        if (a && b)
            throw field_error("OverlappingSupports", "both summands nonzero at position " + std::to_string(i + 1));
        if (a) {
            std::vector<K> v = a->coords();
            if (rg > 0) v.resize(rf + rg, v[0].additive_identity());
            entries[i] = ProjectivePoint<K>(std::move(v));
        } else if (b) {
            std::vector<K> v(rf, b->coords()[0].additive_identity());
            v.insert(v.end(), b->coords().begin(), b->coords().end());
            entries[i] = ProjectivePoint<K>(std::move(v));
        }
    }
    return TupleFlag<K>(rf + rg, std::move(entries));
}

}  // namespace multiflag

#endif
