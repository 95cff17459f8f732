#pragma once

#include <initializer_list>
#include <vector>

#include "hermlie/rational.hpp"

namespace hermlie {

/// Vector in the epsilon-coordinate space, exact rational entries.
/// All arithmetic is exact; the pairing is the standard Euclidean one.
class Weight {
  public:
    Weight() = default;
    explicit Weight(std::size_t dim) : c_(dim, Rat(0)) {}
    Weight(std::initializer_list<Rat> v) : c_(v) {}
    explicit Weight(std::vector<Rat> v) : c_(std::move(v)) {}

    static Weight unit(std::size_t i, std::size_t dim) {
        Weight w(dim);
        w.c_[i] = 1;
        return w;
    }

    std::size_t dim() const { return c_.size(); }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rat>& coords() const { return c_; }

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Weight& operator*=(const Rat& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rat& s, Weight a) { return a *= s; }
    friend Weight operator-(Weight a) { return a *= Rat(-1); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    /// Euclidean pairing <a,b> = sum a_i b_i.
    friend Rat inner(const Weight& a, const Weight& b) {
        Rat s = 0;
        for (std::size_t i = 0; i < a.c_.size(); ++i) s += a.c_[i] * b.c_[i];
        return s;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += rat_string(c_[i]);
        }
        return s + ")";
    }

  private:
    std::vector<Rat> c_;
};

}  // namespace hermlie
