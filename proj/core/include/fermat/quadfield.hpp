#pragma once

#include "fermat/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace fermat {

class FieldElem;

/// The real quadratic field K = Q(sqrt(d)) for a square-free integer d >= 2.
class QuadField {
public:
    /// Throws NotSquareFree / OutOfRange on invalid d.
    explicit QuadField(std::int64_t d);

    std::int64_t d() const { return d_; }
    Int disc() const;

    /// True when the integral basis is {1, (1+sqrt(d))/2}, i.e. d = 1 mod 4.
    bool half_integral_basis() const { return d_ % 4 == 1; }

    std::string integral_basis_desc() const;

    FieldElem element(Rat x, Rat y) const;
    FieldElem from_int(const Int& n) const;
    FieldElem from_rat(const Rat& r) const;
    FieldElem sqrt_d() const;
    /// (1 + sqrt(d))/2 when d = 1 mod 4, sqrt(d) otherwise.
    FieldElem integral_generator() const;
    FieldElem zero() const;
    FieldElem one() const;

    bool operator==(const QuadField& o) const { return d_ == o.d_; }
    bool operator!=(const QuadField& o) const { return d_ != o.d_; }

private:
    std::int64_t d_;
};

QuadField make_field(std::int64_t d);

/// An element x + y*sqrt(d) of K with exact rational coordinates. Elements
/// are always stored in the {1, sqrt(d)} chart, even when the integral basis
/// is {1, (1+sqrt(d))/2}; integrality is decided by the trace/norm test.
class FieldElem {
public:
    FieldElem() : x_(0), y_(0), d_(0) {}
    FieldElem(Rat x, Rat y, const QuadField& field);

    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }
    std::int64_t d() const { return d_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }

    Rat norm() const;
    Rat trace() const;
    FieldElem conj() const;

    /// Throws DivisionByZero on zero.
    FieldElem inv() const;

    /// True iff trace and norm are both rational integers.
    bool is_integral() const;

    /// Sign under the real embedding with sqrt(d) > 0 (exact).
    bool is_positive() const;

    FieldElem pow(long long e) const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator*(const Rat& s) const;
    FieldElem operator/(const Rat& s) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    /// Lexicographic on (x, y); used as a deterministic container order,
    /// not the embedding order.
    bool operator<(const FieldElem& o) const;

    std::string str() const;

private:
    friend class QuadField;
    FieldElem(Rat x, Rat y, std::int64_t d)
        : x_(std::move(x)), y_(std::move(y)), d_(d) {}

    void check_same_field(const FieldElem& o) const;

    Rat x_, y_;
    std::int64_t d_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& e);

} // namespace fermat
