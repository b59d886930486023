#pragma once

#include <map>

#include "recond/bipoly.hpp"

namespace recond {

/// Incremental row space of polynomials over Q, kept in echelon form with
/// graded-lex leading monomials as pivots.
class PolySpan {
  public:
    /// Insert a polynomial; returns true if it enlarged the span.
    bool insert(const BiPoly& p) {
        std::map<Mon2, Rat> row(p.terms().begin(), p.terms().end());
        reduce(row);
        if (row.empty()) return false;
        auto lead = row.rbegin()->first;
        Rat lc = row.rbegin()->second;
        for (auto& [m, c] : row) c /= lc;
        pivots_.emplace(lead, std::move(row));
        return true;
    }

    bool contains(const BiPoly& p) const {
        std::map<Mon2, Rat> row(p.terms().begin(), p.terms().end());
        reduce(row);
        return row.empty();
    }

    long rank() const { return static_cast<long>(pivots_.size()); }

  private:
    void reduce(std::map<Mon2, Rat>& row) const {
        while (!row.empty()) {
            auto lead = row.rbegin()->first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) return;
            Rat factor = row.rbegin()->second;
            for (const auto& [m, c] : it->second) {
                Rat delta = -factor * c;
                auto rit = row.find(m);
                if (rit == row.end()) {
                    if (delta != 0) row[m] = delta;
                } else {
                    rit->second += delta;
                    if (rit->second == 0) row.erase(rit);
                }
            }
        }
    }

    std::map<Mon2, std::map<Mon2, Rat>> pivots_;
};

}  // namespace recond
