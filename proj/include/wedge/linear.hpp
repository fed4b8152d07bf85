#pragma once

#include <map>

#include "wedge/rational.hpp"

namespace wedge {

/// Finite linear combination of basis keys with exact rational coefficients.
/// Zero coefficients are never stored; the key order fixed by Compare is the
/// canonical serialization order.
template <class Key, class Compare>
class SparseVector {
  public:
    using Terms = std::map<Key, Rational, Compare>;

    SparseVector() = default;

    static SparseVector basis(Key key, Rational coeff = 1) {
        SparseVector v;
        v.add(std::move(key), std::move(coeff));
        return v;
    }

    void add(const Key& key, const Rational& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
            return;
        }
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Rational coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    SparseVector& operator+=(const SparseVector& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    SparseVector& operator-=(const SparseVector& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }

    SparseVector scaled(const Rational& c) const {
        SparseVector out;
        if (c.is_zero()) return out;
        for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
        return out;
    }

    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.terms_ == b.terms_;
    }

  private:
    Terms terms_;
};

} // namespace wedge
