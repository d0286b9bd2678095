#pragma once

#include <vector>

#include "alexpoly/rational.hpp"

namespace alexpoly {

// Reduced row echelon basis of a growing span of vectors in Q^len. The basis
// is canonical for the span, so states reached by different insertion orders
// of the same vectors are identical. Copyable; copies are independent.
class q_echelon {
  public:
    explicit q_echelon(int len) : len_(len) {}

    int len() const { return len_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }

    // Inserts v into the span. Returns the pivot position if the rank grew,
    // -1 if v was already in the span.
    int add(std::vector<rational> v) {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const rational& c = v[static_cast<size_t>(pivots_[k])];
            if (c.is_zero()) continue;
            axpy(v, -c, rows_[k], pivots_[k]);
        }
        int piv = -1;
        for (int j = 0; j < len_; ++j)
            if (!v[static_cast<size_t>(j)].is_zero()) {
                piv = j;
                break;
            }
        if (piv < 0) return -1;

        const rational inv = rational(1) / v[static_cast<size_t>(piv)];
        for (int j = piv; j < len_; ++j) {
            rational& c = v[static_cast<size_t>(j)];
            if (!c.is_zero()) c *= inv;
        }
        for (size_t k = 0; k < rows_.size(); ++k) {
            const rational& c = rows_[k][static_cast<size_t>(piv)];
            if (!c.is_zero()) axpy(rows_[k], -c, v, piv);
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
        return piv;
    }

  private:
    // dst += a * src, starting at index `from` (everything before is zero).
    static void axpy(std::vector<rational>& dst, const rational& a,
                     const std::vector<rational>& src, int from) {
        for (size_t j = static_cast<size_t>(from); j < src.size(); ++j)
            if (!src[j].is_zero()) dst[j] += a * src[j];
    }

    int len_;
    std::vector<std::vector<rational>> rows_;
    std::vector<int> pivots_;
};

} // namespace alexpoly
