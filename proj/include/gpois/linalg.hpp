#pragma once

// Exact kernels of rational matrices. Rows are cleared to integers and
// reduced by fraction-free (Bareiss) elimination, so every rank decision
// is an exact integer test; the kernel basis is back-substituted over Q
// and normalized to primitive integer vectors.

#include <numeric>
#include <vector>

#include "gpois/rational.hpp"

namespace gpois {

struct KernelResult {
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::vector<std::vector<Rat>> basis;  // nullity vectors of length cols
};

class LinearSystem {
public:
    explicit LinearSystem(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rows() const { return rows_.size(); }

    void add_row(std::vector<Rat> row) {
        if (row.size() != cols_) throw std::invalid_argument("row length differs from columns");
        bool nonzero = false;
        for (const Rat& v : row)
            if (v != 0) {
                nonzero = true;
                break;
            }
        if (!nonzero) return;
        // Clear denominators and strip the content; rank is unaffected.
        Int lcm = 1;
        for (const Rat& v : row) {
            Int den = v.get_den();
            lcm = lcm / gcd(lcm, den) * den;
        }
        std::vector<Int> cleaned(cols_);
        Int content = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            Rat scaled = row[j] * Rat(lcm);
            cleaned[j] = scaled.get_num();
            content = gcd(content, cleaned[j]);
        }
        if (content > 1)
            for (Int& v : cleaned) v /= content;
        rows_.push_back(std::move(cleaned));
    }

    KernelResult kernel() const {
        std::vector<std::vector<Int>> m = rows_;
        std::vector<std::size_t> pivot_cols;
        std::size_t r = 0;
        Int prev = 1;
        for (std::size_t c = 0; c < cols_ && r < m.size(); ++c) {
            std::size_t p = r;
            while (p < m.size() && m[p][c] == 0) ++p;
            if (p == m.size()) continue;
            std::swap(m[p], m[r]);
            for (std::size_t i = r + 1; i < m.size(); ++i) {
                for (std::size_t j = c + 1; j < cols_; ++j) {
                    Int t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                    m[i][j] = t / prev;  // exact by Sylvester's identity
                }
                m[i][c] = 0;
            }
            prev = m[r][c];
            pivot_cols.push_back(c);
            ++r;
        }

        KernelResult result;
        result.rank = pivot_cols.size();
        result.nullity = cols_ - result.rank;

        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivot_cols) is_pivot[c] = true;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Rat> x(cols_, Rat(0));
            x[f] = 1;
            for (std::size_t k = pivot_cols.size(); k-- > 0;) {
                std::size_t pc = pivot_cols[k];
                Rat acc(0);
                for (std::size_t j = pc + 1; j < cols_; ++j) {
                    if (x[j] == 0) continue;
                    acc += Rat(m[k][j]) * x[j];
                }
                x[pc] = -acc / Rat(m[k][pc]);
            }
            normalize(x);
            result.basis.push_back(std::move(x));
        }
        return result;
    }

private:
    // Scale to a primitive integer vector whose first nonzero entry is positive.
    static void normalize(std::vector<Rat>& v) {
        Int lcm = 1;
        for (const Rat& q : v) {
            Int den = q.get_den();
            lcm = lcm / gcd(lcm, den) * den;
        }
        Int content = 0;
        for (Rat& q : v) q *= Rat(lcm);
        for (const Rat& q : v) content = gcd(content, q.get_num());
        if (content > 1)
            for (Rat& q : v) q /= Rat(content);
        for (const Rat& q : v) {
            if (q == 0) continue;
            if (q < 0)
                for (Rat& w : v) w = -w;
            break;
        }
    }

    std::size_t cols_;
    std::vector<std::vector<Int>> rows_;
};

}  // namespace gpois
