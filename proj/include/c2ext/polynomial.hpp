#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "c2ext/matrix.hpp"
#include "c2ext/ring.hpp"

namespace c2ext {

/// Polynomial over a fixed ring; zero coefficients are never stored.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_) throw std::invalid_argument("polynomial: null ring");
    }
    static Polynomial term(RingPtr ring, const Monomial& m, const Rational& c);
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::size_t i);

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& other) const;

    /// Weighted degree of the highest term; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    /// Every monomial has total exponent >= k (membership in m^k for the
    /// augmentation ideal of the ambient polynomial ring).
    bool in_power_of_irrelevant_ideal(int k) const;

    Rational coefficient(const Monomial& m) const;
    /// Coefficient vector over the given monomial list (order preserved).
    QVector coefficients_on(const std::vector<Monomial>& monos) const;

    /// Formal partial derivative by variable i.
    Polynomial derivative(std::size_t var) const;

private:
    void check_same_ring(const Polynomial& other) const;
    RingPtr ring_;
    std::map<Monomial, Rational> terms_;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

/// Grammar: terms joined by + or -; a term is an optional rational
/// coefficient (`a` or `a/b`) and `*`-separated variable powers `name^k`
/// (`^1` optional). Whitespace is ignored.
Polynomial parse_polynomial(RingPtr ring, const std::string& text);

std::string format_polynomial(const Polynomial& p);
std::string format_monomial(const Monomial& m, const RingSpec& ring);

}  // namespace c2ext
