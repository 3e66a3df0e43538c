#ifndef MVGROWTH_MULTI_INDEX_HPP
#define MVGROWTH_MULTI_INDEX_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvg {

/// Exponent vector in Z_+^m. Ordered by total degree, then lexicographically,
/// so coefficient maps iterate degree-by-degree deterministically.
class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
        validate();
    }

    MultiIndex(std::initializer_list<int> exponents) : e_(exponents) { validate(); }

    static MultiIndex zeros(int dim) { return MultiIndex(std::vector<int>(static_cast<size_t>(dim), 0)); }

    /// Unit index e_k (single first-order derivative in variable k).
    static MultiIndex unit(int dim, int k) {
        std::vector<int> e(static_cast<size_t>(dim), 0);
        e.at(static_cast<size_t>(k)) = 1;
        return MultiIndex(std::move(e));
    }

    int dimension() const { return static_cast<int>(e_.size()); }

    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }

    const std::vector<int>& exponents() const { return e_; }

    bool dominates(const MultiIndex& other) const {
        if (dimension() != other.dimension()) return false;
        for (int i = 0; i < dimension(); ++i)
            if (e_[static_cast<size_t>(i)] < other[i]) return false;
        return true;
    }

    MultiIndex plus(const MultiIndex& other) const {
        std::vector<int> r(e_);
        for (int i = 0; i < dimension(); ++i) r[static_cast<size_t>(i)] += other[i];
        return MultiIndex(std::move(r));
    }

    /// Componentwise difference; requires *this to dominate other.
    MultiIndex minus(const MultiIndex& other) const {
        std::vector<int> r(e_);
        for (int i = 0; i < dimension(); ++i) {
            r[static_cast<size_t>(i)] -= other[i];
            if (r[static_cast<size_t>(i)] < 0)
                throw std::invalid_argument("MultiIndex::minus: result would be negative");
        }
        return MultiIndex(std::move(r));
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }

    // degree-then-lex ordering
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e_ < b.e_;
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        s += ")";
        return s;
    }

private:
    void validate() const {
        if (e_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
        for (int v : e_)
            if (v < 0) throw std::invalid_argument("MultiIndex: exponents must be non-negative");
    }

    std::vector<int> e_;
};

}  // namespace mvg

#endif
