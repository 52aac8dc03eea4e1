#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "germsum/rational.hpp"

namespace germsum {

/// Multi-index in d variables.
struct Exponent {
    std::vector<int> e;

    Exponent() = default;
    explicit Exponent(int dim) : e(static_cast<size_t>(dim), 0) {}
    Exponent(std::initializer_list<int> init) : e(init) {}
    explicit Exponent(std::vector<int> init) : e(std::move(init)) {}

    int dim() const { return static_cast<int>(e.size()); }
    int operator[](int j) const { return e[static_cast<size_t>(j)]; }
    int& operator[](int j) { return e[static_cast<size_t>(j)]; }

    int total_degree() const { return std::accumulate(e.begin(), e.end(), 0); }

    bool is_zero() const {
        for (int v : e)
            if (v != 0) return false;
        return true;
    }

    /// Componentwise beta <= gamma.
    friend bool leq(const Exponent& b, const Exponent& g) {
        for (size_t j = 0; j < b.e.size(); ++j)
            if (b.e[j] > g.e[j]) return false;
        return true;
    }

    /// Componentwise strict beta < gamma.
    friend bool lt_all(const Exponent& b, const Exponent& g) {
        for (size_t j = 0; j < b.e.size(); ++j)
            if (b.e[j] >= g.e[j]) return false;
        return true;
    }

    friend Exponent operator+(const Exponent& a, const Exponent& b) {
        Exponent r = a;
        for (size_t j = 0; j < r.e.size(); ++j) r.e[j] += b.e[j];
        return r;
    }

    /// a - b; caller guarantees b <= a.
    friend Exponent operator-(const Exponent& a, const Exponent& b) {
        Exponent r = a;
        for (size_t j = 0; j < r.e.size(); ++j) r.e[j] -= b.e[j];
        return r;
    }

    friend Exponent operator*(int n, const Exponent& a) {
        Exponent r = a;
        for (auto& v : r.e) v *= n;
        return r;
    }

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.e == b.e; }
    friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }
    /// Lexicographic order, used as the deterministic map key.
    friend bool operator<(const Exponent& a, const Exponent& b) { return a.e < b.e; }

    std::string to_string() const;
};

}  // namespace germsum
