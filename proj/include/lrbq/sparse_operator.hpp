#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrbq/rational.hpp"

namespace lrbq {

using RatVector = std::vector<Rat>;

/// Square matrix over the rationals stored column-wise. Every stored entry
/// is nonzero and each column is sorted by row index.
class SparseOperator {
public:
    using Entry = std::pair<std::size_t, Rat>;
    using Column = std::vector<Entry>;

    SparseOperator() = default;
    explicit SparseOperator(std::size_t dim) : dim_(dim), cols_(dim) {}

    static SparseOperator identity(std::size_t dim) {
        SparseOperator m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.cols_[i].emplace_back(i, Rat(1));
        return m;
    }

    static SparseOperator from_dense(const std::vector<RatVector>& rows) {
        SparseOperator m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) {
                throw std::invalid_argument("SparseOperator: dense input is not square");
            }
            for (std::size_t j = 0; j < rows.size(); ++j) {
                if (!rows[i][j].is_zero()) m.cols_[j].emplace_back(i, rows[i][j]);
            }
        }
        return m;
    }

    std::size_t dim() const { return dim_; }

    std::size_t nnz() const {
        std::size_t total = 0;
        for (const auto& c : cols_) total += c.size();
        return total;
    }

    const Column& column(std::size_t j) const { return cols_.at(j); }

    Rat at(std::size_t i, std::size_t j) const {
        const auto& c = cols_.at(j);
        auto it = std::lower_bound(c.begin(), c.end(), i,
                                   [](const Entry& e, std::size_t r) { return e.first < r; });
        if (it != c.end() && it->first == i) return it->second;
        return Rat(0);
    }

    /// Adds `v` to entry (i, j), dropping the entry if it cancels.
    void add(std::size_t i, std::size_t j, const Rat& v) {
        if (i >= dim_ || j >= dim_) throw std::out_of_range("SparseOperator::add: index out of range");
        if (v.is_zero()) return;
        auto& c = cols_[j];
        auto it = std::lower_bound(c.begin(), c.end(), i,
                                   [](const Entry& e, std::size_t r) { return e.first < r; });
        if (it != c.end() && it->first == i) {
            it->second += v;
            if (it->second.is_zero()) c.erase(it);
        } else {
            c.insert(it, Entry(i, v));
        }
    }

    void set_column(std::size_t j, const std::map<std::size_t, Rat>& entries) {
        auto& c = cols_.at(j);
        c.clear();
        for (const auto& [i, v] : entries) {
            if (i >= dim_) throw std::out_of_range("SparseOperator::set_column: row out of range");
            if (!v.is_zero()) c.emplace_back(i, v);
        }
    }

    RatVector apply(const RatVector& v) const {
        if (v.size() != dim_) throw std::invalid_argument("SparseOperator::apply: size mismatch");
        RatVector out(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            for (const auto& [i, a] : cols_[j]) out[i] += a * v[j];
        }
        return out;
    }

    Rat trace() const {
        Rat t;
        for (std::size_t j = 0; j < dim_; ++j) t += at(j, j);
        return t;
    }

    bool is_zero() const {
        return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
    }

    std::vector<RatVector> to_dense() const {
        std::vector<RatVector> rows(dim_, RatVector(dim_));
        for (std::size_t j = 0; j < dim_; ++j) {
            for (const auto& [i, a] : cols_[j]) rows[i][j] = a;
        }
        return rows;
    }

    SparseOperator scaled(const Rat& s) const {
        SparseOperator m(dim_);
        if (s.is_zero()) return m;
        for (std::size_t j = 0; j < dim_; ++j) {
            for (const auto& [i, a] : cols_[j]) m.cols_[j].emplace_back(i, a * s);
        }
        return m;
    }

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
        check_same(a, b);
        SparseOperator m = a;
        for (std::size_t j = 0; j < b.dim_; ++j) {
            for (const auto& [i, v] : b.cols_[j]) m.add(i, j, v);
        }
        return m;
    }

    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
        return a + b.scaled(Rat(-1));
    }

    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
        check_same(a, b);
        SparseOperator m(a.dim_);
        for (std::size_t j = 0; j < b.dim_; ++j) {
            std::map<std::size_t, Rat> acc;
            for (const auto& [k, bv] : b.cols_[j]) {
                for (const auto& [i, av] : a.cols_[k]) acc[i] += av * bv;
            }
            m.set_column(j, acc);
        }
        return m;
    }

    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        return a.dim_ == b.dim_ && a.cols_ == b.cols_;
    }

private:
    static void check_same(const SparseOperator& a, const SparseOperator& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("SparseOperator: dimension mismatch");
    }

    std::size_t dim_ = 0;
    std::vector<Column> cols_;
};

namespace detail {

/// Fraction-free Gauss-Jordan elimination on sparse integer rows. Each row is
/// cleared of denominators on entry and divided by its content after every
/// update. The pivot column is the one with the fewest nonzeros among rows
/// not yet used as pivots.
class Eliminator {
public:
    using Row = std::map<std::size_t, mpz_class>;

    Eliminator(std::size_t ncols, const std::vector<std::map<std::size_t, Rat>>& rows)
        : ncols_(ncols), col_rows_(ncols) {
        rows_.reserve(rows.size());
        for (const auto& r : rows) {
            mpz_class den = 1;
            for (const auto& [c, v] : r) {
                if (c >= ncols_) throw std::out_of_range("Eliminator: column out of range");
                if (!v.is_zero()) den = lcm(den, v.denominator());
            }
            Row ir;
            for (const auto& [c, v] : r) {
                if (v.is_zero()) continue;
                ir[c] = v.numerator() * (den / v.denominator());
            }
            normalize(ir);
            const std::size_t id = rows_.size();
            rows_.push_back(std::move(ir));
            for (const auto& [c, v] : rows_[id]) col_rows_[c].insert(id);
        }
        run();
    }

    /// (pivot column, row) pairs in elimination order.
    const std::vector<std::pair<std::size_t, std::size_t>>& pivots() const { return pivots_; }
    const Row& row(std::size_t id) const { return rows_[id]; }
    std::size_t ncols() const { return ncols_; }

private:
    static void normalize(Row& r) {
        mpz_class g = 0;
        for (const auto& [c, v] : r) g = gcd(g, v);
        if (g > 1) {
            for (auto& [c, v] : r) v /= g;
        }
    }

    void run() {
        std::vector<bool> used(rows_.size(), false);
        std::vector<bool> pivot_col(ncols_, false);
        for (;;) {
            // Column with the fewest entries among unused rows.
            std::size_t best_col = ncols_;
            std::size_t best_count = 0;
            for (std::size_t c = 0; c < ncols_; ++c) {
                if (pivot_col[c]) continue;
                std::size_t count = 0;
                for (std::size_t id : col_rows_[c]) {
                    if (!used[id]) ++count;
                }
                if (count > 0 && (best_col == ncols_ || count < best_count)) {
                    best_col = c;
                    best_count = count;
                    if (count == 1) break;
                }
            }
            if (best_col == ncols_) break;

            std::size_t prow = rows_.size();
            for (std::size_t id : col_rows_[best_col]) {
                if (used[id]) continue;
                if (prow == rows_.size() || rows_[id].size() < rows_[prow].size()) prow = id;
            }
            used[prow] = true;
            pivot_col[best_col] = true;
            pivots_.emplace_back(best_col, prow);

            const mpz_class a = rows_[prow].at(best_col);
            const std::vector<std::size_t> targets(col_rows_[best_col].begin(), col_rows_[best_col].end());
            for (std::size_t id : targets) {
                if (id == prow) continue;
                const mpz_class b = rows_[id].at(best_col);
                const mpz_class g = gcd(a, b);
                const mpz_class sa = a / g;
                const mpz_class sb = b / g;
                Row& r = rows_[id];
                for (const auto& [c, v] : r) col_rows_[c].erase(id);
                Row updated;
                auto it = r.begin();
                auto pt = rows_[prow].begin();
                while (it != r.end() || pt != rows_[prow].end()) {
                    if (pt == rows_[prow].end() || (it != r.end() && it->first < pt->first)) {
                        updated.emplace(it->first, sa * it->second);
                        ++it;
                    } else if (it == r.end() || pt->first < it->first) {
                        updated.emplace(pt->first, -sb * pt->second);
                        ++pt;
                    } else {
                        mpz_class v = sa * it->second - sb * pt->second;
                        if (v != 0) updated.emplace(it->first, std::move(v));
                        ++it;
                        ++pt;
                    }
                }
                normalize(updated);
                r = std::move(updated);
                for (const auto& [c, v] : r) col_rows_[c].insert(id);
            }
        }
    }

    std::size_t ncols_;
    std::vector<Row> rows_;
    std::vector<std::set<std::size_t>> col_rows_;
    std::vector<std::pair<std::size_t, std::size_t>> pivots_;
};

/// In-place reduced row echelon form of dense rational rows; returns rank.
inline std::size_t rref_in_place(std::vector<RatVector>& rows, std::size_t ncols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rat inv = Rat(1) / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Rat f = rows[i][c];
            for (std::size_t k = c; k < ncols; ++k) {
                if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
            }
        }
        ++r;
    }
    rows.resize(r);
    return r;
}

}  // namespace detail

/// Basis of the right nullspace of `m`, returned in reduced row echelon form.
/// Empty iff `m` is injective.
inline std::vector<RatVector> kernel_basis(const SparseOperator& m) {
    const std::size_t n = m.dim();
    std::vector<std::map<std::size_t, Rat>> rows(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [i, v] : m.column(j)) rows[i][j] = v;
    }
    detail::Eliminator elim(n, rows);

    std::vector<bool> is_pivot(n, false);
    for (const auto& [c, r] : elim.pivots()) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(n);
        v[f] = Rat(1);
        for (const auto& [c, id] : elim.pivots()) {
            const auto& row = elim.row(id);
            auto it = row.find(f);
            if (it == row.end()) continue;
            v[c] = -Rat(it->second, row.at(c));
        }
        basis.push_back(std::move(v));
    }
    detail::rref_in_place(basis, n);
    return basis;
}

/// Dimension of the span of `vectors` (all of length `ncols`).
inline std::size_t rank_of(const std::vector<std::map<std::size_t, Rat>>& vectors, std::size_t ncols) {
    if (vectors.empty()) return 0;
    return detail::Eliminator(ncols, vectors).pivots().size();
}

/// Evaluates sum_i coeffs[i] * M^i (Horner scheme, exact).
inline SparseOperator poly_of_operator(const SparseOperator& m, const std::vector<Rat>& coeffs) {
    const std::size_t n = m.dim();
    SparseOperator result(n);
    const SparseOperator id = SparseOperator::identity(n);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        result = m * result + id.scaled(*it);
    }
    return result;
}

/// Coefficients (lowest degree first) of prod_{i != j} (X - l_i)/(l_j - l_i).
inline std::vector<Rat> lagrange_polynomial(const std::vector<Rat>& eigenvalues, std::size_t j) {
    if (j >= eigenvalues.size()) throw std::out_of_range("lagrange_polynomial: index out of range");
    for (std::size_t a = 0; a < eigenvalues.size(); ++a) {
        for (std::size_t b = a + 1; b < eigenvalues.size(); ++b) {
            if (eigenvalues[a] == eigenvalues[b]) throw std::invalid_argument("non-distinct spectrum");
        }
    }
    std::vector<Rat> poly{Rat(1)};
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        if (i == j) continue;
        const Rat denom = eigenvalues[j] - eigenvalues[i];
        std::vector<Rat> next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k] / denom;
            next[k] -= poly[k] * eigenvalues[i] / denom;
        }
        poly = std::move(next);
    }
    return poly;
}

/// Coefficients of prod_i (X - roots_i), lowest degree first.
inline std::vector<Rat> polynomial_from_roots(const std::vector<Rat>& roots) {
    std::vector<Rat> poly{Rat(1)};
    for (const auto& r : roots) {
        std::vector<Rat> next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * r;
        }
        poly = std::move(next);
    }
    return poly;
}

/// Lagrange projector onto the eigenspace of eigenvalues[j]. Only meaningful
/// when M is annihilated by prod (X - eigenvalues[i]); the caller checks that.
inline SparseOperator eigen_projection(const SparseOperator& m, const std::vector<Rat>& eigenvalues,
                                       std::size_t j) {
    return poly_of_operator(m, lagrange_polynomial(eigenvalues, j));
}

/// Calls f(col, powers) for each column, where powers[k] = M^k e_col for
/// k = 0..degree (dense vectors).
template <class F>
void for_each_krylov_column(const SparseOperator& m, std::size_t degree, F&& f) {
    const std::size_t n = m.dim();
    std::vector<RatVector> powers(degree + 1);
    for (std::size_t c = 0; c < n; ++c) {
        powers[0].assign(n, Rat(0));
        powers[0][c] = Rat(1);
        for (std::size_t k = 1; k <= degree; ++k) powers[k] = m.apply(powers[k - 1]);
        f(c, static_cast<const std::vector<RatVector>&>(powers));
    }
}

/// Dense row-major CSV with entries written as "p/q" (or "p" for integers).
inline std::string to_csv(const SparseOperator& m) {
    std::ostringstream os;
    const auto rows = m.to_dense();
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ',';
            os << row[j].str();
        }
        os << '\n';
    }
    return os.str();
}

/// {"dim": d, "entries": [[i, j, "p/q"], ...]} in column-major order.
inline nlohmann::json to_json(const SparseOperator& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
        for (const auto& [i, v] : m.column(j)) entries.push_back({i, j, v.str()});
    }
    return {{"dim", m.dim()}, {"entries", entries}};
}

inline SparseOperator operator_from_json(const nlohmann::json& j) {
    SparseOperator m(j.at("dim").get<std::size_t>());
    for (const auto& e : j.at("entries")) {
        m.add(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), Rat::parse(e.at(2).get<std::string>()));
    }
    return m;
}

}  // namespace lrbq
