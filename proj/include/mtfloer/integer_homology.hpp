#pragma once

// Exact homology of finite free chain complexes over Z.
//
// Matrices hold arbitrary-precision entries. Smith normal form uses the
// smallest-nonzero-entry pivot to limit coefficient growth.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "graded_group.hpp"
#include "integer.hpp"

namespace mtfloer {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw BadParams("ragged matrix literal");
            for (long long x : r)
                data_.emplace_back(x);
        }
    }

    static IntMatrix identity(std::size_t n)
    {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, a), (*this)(r, b));
    }

    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor)
    {
        if (factor == 0)
            return;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Integer& s = (*this)(src, c);
            if (s != 0)
                (*this)(dst, c) += factor * s;
        }
    }

    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor)
    {
        if (factor == 0)
            return;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Integer& s = (*this)(r, src);
            if (s != 0)
                (*this)(r, dst) += factor * s;
        }
    }

    void negate_row(std::size_t r)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            (*this)(r, c) = -(*this)(r, c);
    }

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw BadParams("matrix shape mismatch in product");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    out(i, j) += x * b(k, j);
        }
    return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix m)
{
    if (m.rows() != m.cols())
        throw BadParams("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

struct SmithForm {
    IntMatrix left;     // U, unimodular
    IntMatrix diagonal; // D = U * m * V
    IntMatrix right;    // V, unimodular
};

namespace detail {

// Reduces `d` in place to Smith form. When `left`/`right` are non-null the same
// row/column operations are recorded there.
inline void smith_reduce(IntMatrix& d, IntMatrix* left, IntMatrix* right)
{
    const std::size_t rows = d.rows();
    const std::size_t cols = d.cols();
    auto row_swap = [&](std::size_t a, std::size_t b) {
        d.swap_rows(a, b);
        if (left)
            left->swap_rows(a, b);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        d.swap_cols(a, b);
        if (right)
            right->swap_cols(a, b);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
        d.add_row_multiple(dst, src, f);
        if (left)
            left->add_row_multiple(dst, src, f);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
        d.add_col_multiple(dst, src, f);
        if (right)
            right->add_col_multiple(dst, src, f);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (d(i, j) != 0 && (!best || abs_value(d(i, j)) < abs_value(d(best->first, best->second))))
                    best = {{i, j}};
        if (!best)
            break;
        row_swap(t, best->first);
        col_swap(t, best->second);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0)
                    continue;
                row_add(i, t, -(d(i, t) / d(t, t)));
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0)
                    continue;
                col_add(j, t, -(d(t, j) / d(t, t)));
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot is left in row or column t.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (d(i, t) != 0 && abs_value(d(i, t)) < abs_value(d(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(t, j) != 0 && abs_value(d(t, j)) < abs_value(d(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                row_swap(t, bi);
                col_swap(t, bj);
                continue;
            }
            if (abs_value(d(t, t)) == 1)
                break;
            // Enforce divisibility of the trailing block by the pivot.
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < rows && !offending; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        offending = i;
                        break;
                    }
            if (!offending)
                break;
            row_add(t, *offending, Integer(1));
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            if (left)
                left->negate_row(t);
        }
    }
}

} // namespace detail

/// Nonzero invariant factors of m, in divisibility order.
inline std::vector<Integer> smith_invariants(const IntMatrix& m)
{
    IntMatrix d = m;
    detail::smith_reduce(d, nullptr, nullptr);
    std::vector<Integer> out;
    for (std::size_t t = 0; t < std::min(d.rows(), d.cols()); ++t)
        if (d(t, t) != 0)
            out.push_back(d(t, t));
    return out;
}

/// Throws if `s` is not a Smith decomposition of `m`.
inline void verify_smith(const IntMatrix& m, const SmithForm& s)
{
    if (s.left * m * s.right != s.diagonal)
        throw Error("smith: U * m * V != D");
    if (abs_value(determinant(s.left)) != 1 || abs_value(determinant(s.right)) != 1)
        throw Error("smith: transform is not unimodular");
    const IntMatrix& d = s.diagonal;
    Integer prev = 1;
    bool seen_zero = false;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (i != j && d(i, j) != 0)
                throw Error("smith: off-diagonal entry");
            if (i != j)
                continue;
            if (d(i, i) < 0)
                throw Error("smith: negative invariant");
            if (d(i, i) == 0) {
                seen_zero = true;
                continue;
            }
            if (seen_zero || d(i, i) % prev != 0)
                throw Error("smith: divisibility chain broken");
            prev = d(i, i);
        }
}

inline SmithForm smith_normal_form(const IntMatrix& m)
{
    SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    detail::smith_reduce(s.diagonal, &s.left, &s.right);
#ifdef MTFLOER_VERIFY_SNF
    verify_smith(m, s);
#endif
    return s;
}

/// Finite free chain complex. boundary(d) maps degree d to degree d - 1, so its
/// shape is dim(d - 1) x dim(d). d^2 = 0 is checked at construction.
class FreeComplex {
public:
    FreeComplex() = default;

    FreeComplex(std::map<Degree, std::vector<std::string>> basis, std::map<Degree, IntMatrix> boundary)
        : basis_(std::move(basis)), boundary_(std::move(boundary))
    {
        std::erase_if(basis_, [](const auto& kv) { return kv.second.empty(); });
        for (const auto& [deg, m] : boundary_) {
            if (m.rows() != dim(deg - 1) || m.cols() != dim(deg))
                throw NotAComplex("boundary in degree " + std::to_string(deg) + " has shape "
                                  + std::to_string(m.rows()) + "x" + std::to_string(m.cols())
                                  + ", expected " + std::to_string(dim(deg - 1)) + "x"
                                  + std::to_string(dim(deg)));
        }
        std::erase_if(boundary_, [](const auto& kv) { return kv.second.rows() == 0 || kv.second.cols() == 0; });
        for (const auto& [deg, m] : boundary_) {
            auto below = boundary_.find(deg - 1);
            if (below == boundary_.end())
                continue;
            if (!(below->second * m).is_zero())
                throw NotAComplex("boundary squares to nonzero at degree " + std::to_string(deg));
        }
    }

    std::size_t dim(Degree d) const
    {
        auto it = basis_.find(d);
        return it == basis_.end() ? 0 : it->second.size();
    }

    IntMatrix boundary(Degree d) const
    {
        auto it = boundary_.find(d);
        if (it != boundary_.end())
            return it->second;
        return IntMatrix(dim(d - 1), dim(d));
    }

    const std::map<Degree, std::vector<std::string>>& basis() const { return basis_; }
    const std::map<Degree, IntMatrix>& boundaries() const { return boundary_; }

    std::size_t total_dim() const
    {
        std::size_t n = 0;
        for (const auto& [d, b] : basis_)
            n += b.size();
        return n;
    }

private:
    std::map<Degree, std::vector<std::string>> basis_;
    std::map<Degree, IntMatrix> boundary_;
};

/// Accumulates generators and differential coefficients, then assembles the per-degree matrices.
class ComplexBuilder {
public:
    using Id = std::size_t;

    Id add_generator(Degree degree, std::string label)
    {
        auto& labels = labels_[degree];
        gens_.push_back({degree, labels.size()});
        labels.push_back(std::move(label));
        return gens_.size() - 1;
    }

    Degree degree_of(Id id) const { return gens_.at(id).degree; }

    /// Adds coeff * target to the boundary of source.
    void add_boundary(Id source, Id target, const Integer& coeff)
    {
        if (gens_.at(target).degree != gens_.at(source).degree - 1)
            throw NotAComplex("differential term does not lower degree by one: " + label(source) + " -> "
                              + label(target));
        entries_.push_back({source, target, coeff});
    }

    const std::string& label(Id id) const { return labels_.at(gens_[id].degree).at(gens_[id].index); }

    std::size_t size() const { return gens_.size(); }

    FreeComplex build() const
    {
        std::map<Degree, IntMatrix> bd;
        for (const auto& e : entries_) {
            const auto& s = gens_[e.source];
            const auto& t = gens_[e.target];
            auto it = bd.find(s.degree);
            if (it == bd.end())
                it = bd.emplace(s.degree, IntMatrix(labels_.at(t.degree).size(), labels_.at(s.degree).size())).first;
            it->second(t.index, s.index) += e.coeff;
        }
        return FreeComplex(labels_, std::move(bd));
    }

private:
    struct Gen {
        Degree degree;
        std::size_t index;
    };
    struct Entry {
        Id source;
        Id target;
        Integer coeff;
    };
    std::map<Degree, std::vector<std::string>> labels_;
    std::vector<Gen> gens_;
    std::vector<Entry> entries_;
};

inline GradedGroup homology(const FreeComplex& c)
{
    std::map<Degree, std::vector<Integer>> invariants;
    for (const auto& [deg, m] : c.boundaries())
        invariants[deg] = smith_invariants(m);
    auto rank_of = [&](Degree d) -> Rank {
        auto it = invariants.find(d);
        return it == invariants.end() ? 0 : static_cast<Rank>(it->second.size());
    };
    GradedGroup out;
    for (const auto& [deg, labels] : c.basis()) {
        const Rank free_rank = static_cast<Rank>(labels.size()) - rank_of(deg) - rank_of(deg + 1);
        std::vector<Integer> torsion;
        if (auto it = invariants.find(deg + 1); it != invariants.end())
            for (const auto& t : it->second)
                if (t > 1)
                    torsion.push_back(t);
        out.add(deg, free_rank, std::move(torsion));
    }
    return out;
}

inline Rank euler_characteristic(const FreeComplex& c)
{
    Rank chi = 0;
    for (const auto& [deg, labels] : c.basis())
        chi += (deg % 2 == 0 ? 1 : -1) * static_cast<Rank>(labels.size());
    return chi;
}

/// Debug dump: per-degree labels and row-major boundary matrices.
inline nlohmann::json to_json(const FreeComplex& c)
{
    nlohmann::json out;
    for (const auto& [deg, labels] : c.basis())
        out["basis"][std::to_string(deg)] = labels;
    for (const auto& [deg, m] : c.boundaries()) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < m.cols(); ++j)
                row.push_back(m(i, j).str());
            rows.push_back(row);
        }
        out["boundary"][std::to_string(deg)] = rows;
    }
    return out;
}

} // namespace mtfloer
