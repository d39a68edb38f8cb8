#pragma once

#include "homweyl/scalar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace homweyl {

/// Exponents of a basis monomial y^i x^j of the first Weyl algebra.
struct Monomial {
	unsigned y = 0;
	unsigned x = 0;

	unsigned total() const { return y + x; }
	friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: descending total degree, then descending y-degree.
/// Within a fixed total degree the y-degree determines the monomial, so this
/// is a strict total order on basis monomials.
struct CanonicalTermOrder {
	bool operator()(const Monomial& a, const Monomial& b) const
	{
		if (a.total() != b.total())
			return a.total() > b.total();
		return a.y > b.y;
	}
};

/// Total degree as an element of N ∪ {-∞}; the zero polynomial has degree -∞.
class Degree {
public:
	static Degree neg_infinity() { return Degree{}; }
	static Degree of(unsigned d)
	{
		Degree deg;
		deg.value_ = d;
		return deg;
	}

	bool is_neg_infinity() const { return !value_.has_value(); }
	unsigned value() const
	{
		if (!value_)
			throw std::logic_error("Degree: -infinity has no finite value");
		return *value_;
	}

	friend Degree operator+(const Degree& a, const Degree& b)
	{
		if (a.value_ && b.value_)
			return of(*a.value_ + *b.value_);
		return neg_infinity();
	}
	friend bool operator==(const Degree&, const Degree&) = default;

private:
	std::optional<unsigned> value_;
};

inline std::string to_string(const Degree& d)
{
	return d.is_neg_infinity() ? std::string("-inf") : std::to_string(d.value());
}

/// An element of the first Weyl algebra A_1 on the basis {y^i x^j}, stored as
/// a finite map from exponents to nonzero rational coefficients. The zero
/// polynomial is the empty map. Values are immutable in spirit: every
/// operation below returns a fresh polynomial.
class WeylPoly {
public:
	using TermMap = std::map<Monomial, Scalar, CanonicalTermOrder>;

	WeylPoly() = default;
	WeylPoly(const Scalar& constant) { add_term({0, 0}, constant); }

	static WeylPoly monomial(unsigned ydeg, unsigned xdeg, const Scalar& coeff = 1)
	{
		WeylPoly p;
		p.add_term({ydeg, xdeg}, coeff);
		return p;
	}
	static WeylPoly x() { return monomial(0, 1); }
	static WeylPoly y() { return monomial(1, 0); }
	static WeylPoly one() { return WeylPoly(Scalar(1)); }

	const TermMap& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	/// Coefficient of y^ydeg x^xdeg, zero when absent.
	Scalar coeff(unsigned ydeg, unsigned xdeg) const
	{
		auto it = terms_.find({ydeg, xdeg});
		return it == terms_.end() ? Scalar(0) : it->second;
	}

	/// Adds c·y^i x^j, merging like terms and dropping resulting zeros.
	void add_term(const Monomial& m, const Scalar& c)
	{
		if (c == 0)
			return;
		auto [it, inserted] = terms_.emplace(m, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	WeylPoly& operator+=(const WeylPoly& rhs)
	{
		for (const auto& [m, c] : rhs.terms_)
			add_term(m, c);
		return *this;
	}
	WeylPoly& operator-=(const WeylPoly& rhs)
	{
		for (const auto& [m, c] : rhs.terms_)
			add_term(m, -c);
		return *this;
	}
	WeylPoly& operator*=(const Scalar& s)
	{
		if (s == 0)
			terms_.clear();
		else
			for (auto& [m, c] : terms_)
				c *= s;
		return *this;
	}

	friend WeylPoly operator+(WeylPoly lhs, const WeylPoly& rhs) { return lhs += rhs; }
	friend WeylPoly operator-(WeylPoly lhs, const WeylPoly& rhs) { return lhs -= rhs; }
	friend WeylPoly operator-(const WeylPoly& p)
	{
		WeylPoly r = p;
		for (auto& [m, c] : r.terms_)
			c = -c;
		return r;
	}
	friend WeylPoly operator*(WeylPoly p, const Scalar& s) { return p *= s; }
	friend WeylPoly operator*(const Scalar& s, WeylPoly p) { return p *= s; }

	friend bool operator==(const WeylPoly&, const WeylPoly&) = default;

private:
	TermMap terms_;
};

inline WeylPoly add(const WeylPoly& p, const WeylPoly& q) { return p + q; }

/// The associative product of A_1 in normal form, via the Ore rule with
/// sigma = id and delta = d/dy:
///   y^a x^m · y^b x^n = sum_d C(m,d) · b(b-1)...(b-d+1) · y^{a+b-d} x^{m+n-d}.
inline WeylPoly assoc_mul(const WeylPoly& p, const WeylPoly& q)
{
	WeylPoly out;
	for (const auto& [a, ca] : p.terms())
		for (const auto& [b, cb] : q.terms())
		{
			const Scalar base = ca * cb;
			const unsigned dmax = std::min(a.x, b.y);
			for (unsigned d = 0; d <= dmax; ++d)
				out.add_term({a.y + b.y - d, a.x + b.x - d},
				             base * Scalar(binomial(a.x, d) * falling_factorial(b.y, d)));
		}
	return out;
}

inline WeylPoly operator*(const WeylPoly& p, const WeylPoly& q) { return assoc_mul(p, q); }

inline WeylPoly d_dy(const WeylPoly& p)
{
	WeylPoly out;
	for (const auto& [m, c] : p.terms())
		if (m.y > 0)
			out.add_term({m.y - 1, m.x}, c * Scalar(m.y));
	return out;
}

inline WeylPoly d_dx(const WeylPoly& p)
{
	WeylPoly out;
	for (const auto& [m, c] : p.terms())
		if (m.x > 0)
			out.add_term({m.y, m.x - 1}, c * Scalar(m.x));
	return out;
}

inline Degree total_degree(const WeylPoly& p)
{
	// terms are kept in descending total degree, so the first one is maximal
	if (p.is_zero())
		return Degree::neg_infinity();
	return Degree::of(p.terms().begin()->first.total());
}

inline bool is_scalar(const WeylPoly& p)
{
	return p.is_zero() || (p.terms().size() == 1 && p.terms().begin()->first == Monomial{0, 0});
}

/// True when p lies in K[x] (no y appears).
inline bool is_x_only(const WeylPoly& p)
{
	return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.first.y == 0; });
}

/// The hom-associative Weyl algebra A_1^k; k = 0 is the associative A_1.
struct AlgebraCtx {
	Scalar k = 0;

	bool associative() const { return k == 0; }
};

/// The twisting map alpha_k = e^{k d/dy}, computed as the substitution
/// y -> y + k (binomial expansion). A unital algebra endomorphism of A_1;
/// fixes x, sends y to y + k.
inline WeylPoly alpha(const AlgebraCtx& ctx, const WeylPoly& p)
{
	if (ctx.k == 0)
		return p;
	WeylPoly out;
	for (const auto& [m, c] : p.terms())
	{
		Scalar kpow = 1;
		for (unsigned l = 0; l <= m.y; ++l)
		{
			out.add_term({m.y - l, m.x}, c * kpow * Scalar(binomial(m.y, l)));
			kpow *= ctx.k;
		}
	}
	return out;
}

inline WeylPoly alpha_inv(const AlgebraCtx& ctx, const WeylPoly& p) { return alpha({-ctx.k}, p); }

/// The star product of A_1^k: p * q = alpha_k(p · q).
inline WeylPoly star_mul(const AlgebraCtx& ctx, const WeylPoly& p, const WeylPoly& q)
{
	return alpha(ctx, assoc_mul(p, q));
}

inline WeylPoly commutator(const WeylPoly& p, const WeylPoly& q)
{
	return assoc_mul(p, q) - assoc_mul(q, p);
}

inline WeylPoly star_commutator(const AlgebraCtx& ctx, const WeylPoly& p, const WeylPoly& q)
{
	return alpha(ctx, commutator(p, q));
}

/// (p, q, r)_* = (p*q)*r - p*(q*r).
inline WeylPoly star_associator(const AlgebraCtx& ctx, const WeylPoly& p, const WeylPoly& q, const WeylPoly& r)
{
	return star_mul(ctx, star_mul(ctx, p, q), r) - star_mul(ctx, p, star_mul(ctx, q, r));
}

/// Left-normed star power p^{*n} = (((p*p)*p)...)*p. The star product has no
/// unit (1 is only a weak unit), so n = 0 is rejected.
inline WeylPoly star_power_left(const AlgebraCtx& ctx, const WeylPoly& p, unsigned n)
{
	if (n == 0)
		throw std::invalid_argument("star_power_left: exponent must be >= 1");
	WeylPoly out = p;
	for (unsigned i = 1; i < n; ++i)
		out = star_mul(ctx, out, p);
	return out;
}

/// Canonical rendering: terms in canonical order, coefficients as "a" or
/// "a/b", unit coefficients and exponents suppressed. E.g. "y x + 1",
/// "-1/2 y^2", "0".
inline std::string to_string(const WeylPoly& p)
{
	if (p.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (const auto& [m, c] : p.terms())
	{
		const bool neg = c < 0;
		const Scalar mag = neg ? Scalar(-c) : c;
		if (first)
		{
			if (neg)
				out += '-';
			first = false;
		}
		else
			out += neg ? " - " : " + ";

		std::string mono;
		if (m.y > 0)
		{
			mono += 'y';
			if (m.y > 1)
				mono += '^' + std::to_string(m.y);
		}
		if (m.x > 0)
		{
			if (!mono.empty())
				mono += ' ';
			mono += 'x';
			if (m.x > 1)
				mono += '^' + std::to_string(m.x);
		}
		if (mono.empty())
			out += to_string(mag);
		else if (mag == 1)
			out += mono;
		else
			out += to_string(mag) + ' ' + mono;
	}
	return out;
}

inline std::ostream& operator<<(std::ostream& os, const WeylPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << to_string(d); }

} // namespace homweyl
