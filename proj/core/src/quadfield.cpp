#include "fermat/quadfield.hpp"

#include "fermat/errors.hpp"
#include "fermat/numutil.hpp"

#include <ostream>
#include <utility>

namespace fermat {

QuadField::QuadField(std::int64_t d) : d_(d) {
    if (d < 2) throw OutOfRange("QuadField: d must be >= 2, got " + std::to_string(d));
    if (!num::is_square_free(Int(d)))
        throw NotSquareFree("QuadField: d must be square-free, got " + std::to_string(d));
}

Int QuadField::disc() const {
    return half_integral_basis() ? Int(d_) : Int(4) * d_;
}

std::string QuadField::integral_basis_desc() const {
    if (half_integral_basis())
        return "{1, (1+sqrt(" + std::to_string(d_) + "))/2}";
    return "{1, sqrt(" + std::to_string(d_) + ")}";
}

FieldElem QuadField::element(Rat x, Rat y) const {
    return FieldElem(std::move(x), std::move(y), d_);
}

FieldElem QuadField::from_int(const Int& n) const { return FieldElem(Rat(n), Rat(0), d_); }

FieldElem QuadField::from_rat(const Rat& r) const { return FieldElem(r, Rat(0), d_); }

FieldElem QuadField::sqrt_d() const { return FieldElem(Rat(0), Rat(1), d_); }

FieldElem QuadField::integral_generator() const {
    if (half_integral_basis()) return FieldElem(Rat(1, 2), Rat(1, 2), d_);
    return sqrt_d();
}

FieldElem QuadField::zero() const { return FieldElem(Rat(0), Rat(0), d_); }

FieldElem QuadField::one() const { return FieldElem(Rat(1), Rat(0), d_); }

QuadField make_field(std::int64_t d) { return QuadField(d); }

FieldElem::FieldElem(Rat x, Rat y, const QuadField& field)
    : x_(std::move(x)), y_(std::move(y)), d_(field.d()) {}

void FieldElem::check_same_field(const FieldElem& o) const {
    if (d_ != o.d_)
        throw FieldMismatch("FieldElem: mixing elements of Q(sqrt(" + std::to_string(d_) +
                            ")) and Q(sqrt(" + std::to_string(o.d_) + "))");
}

Rat FieldElem::norm() const { return x_ * x_ - Rat(d_) * y_ * y_; }

Rat FieldElem::trace() const { return 2 * x_; }

FieldElem FieldElem::conj() const { return FieldElem(x_, -y_, d_); }

FieldElem FieldElem::inv() const {
    if (is_zero()) throw DivisionByZero("FieldElem::inv: zero element");
    const Rat n = norm();
    return FieldElem(x_ / n, -y_ / n, d_);
}

bool FieldElem::is_integral() const {
    return is_integer(trace()) && is_integer(norm());
}

bool FieldElem::is_positive() const {
    if (is_zero()) return false;
    const int sx = sign_of(x_), sy = sign_of(y_);
    if (sx >= 0 && sy >= 0) return true;
    if (sx <= 0 && sy <= 0) return false;
    // Opposite signs: compare x^2 against d*y^2.
    const Rat lhs = x_ * x_, rhs = Rat(d_) * y_ * y_;
    if (sx > 0) return lhs > rhs;
    return rhs > lhs;
}

FieldElem FieldElem::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    FieldElem result(Rat(1), Rat(0), d_);
    FieldElem base = *this;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

FieldElem FieldElem::operator-() const { return FieldElem(-x_, -y_, d_); }

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(o);
    return FieldElem(x_ + o.x_, y_ + o.y_, d_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(o);
    return FieldElem(x_ - o.x_, y_ - o.y_, d_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(o);
    return FieldElem(x_ * o.x_ + Rat(d_) * y_ * o.y_, x_ * o.y_ + y_ * o.x_, d_);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    check_same_field(o);
    return *this * o.inv();
}

FieldElem FieldElem::operator*(const Rat& s) const { return FieldElem(x_ * s, y_ * s, d_); }

FieldElem FieldElem::operator/(const Rat& s) const {
    if (s == 0) throw DivisionByZero("FieldElem: division by zero rational");
    return FieldElem(x_ / s, y_ / s, d_);
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same_field(o);
    return x_ == o.x_ && y_ == o.y_;
}

bool FieldElem::operator<(const FieldElem& o) const {
    check_same_field(o);
    if (x_ != o.x_) return x_ < o.x_;
    return y_ < o.y_;
}

std::string FieldElem::str() const {
    if (y_ == 0) return rat_to_string(x_);
    return "(" + rat_to_string(x_) + ")+(" + rat_to_string(y_) + ")*sqrt(" +
           std::to_string(d_) + ")";
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.str(); }

} // namespace fermat
