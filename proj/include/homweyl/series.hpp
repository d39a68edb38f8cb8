#pragma once

#include "homweyl/weyl.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homweyl {

/// A formal power series in t with WeylPoly coefficients, truncated at
/// t^order. Arithmetic is exact modulo t^{order+1}; binary operations require
/// equal orders.
class TruncatedSeries {
public:
	explicit TruncatedSeries(unsigned order) : coeffs_(order + 1) {}

	/// Embeds p as the constant series p + 0·t + ... + 0·t^order.
	static TruncatedSeries constant(unsigned order, const WeylPoly& p)
	{
		TruncatedSeries s(order);
		s.coeffs_[0] = p;
		return s;
	}

	unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

	const WeylPoly& coeff(unsigned i) const
	{
		if (i >= coeffs_.size())
			throw std::out_of_range("TruncatedSeries: coefficient index beyond order");
		return coeffs_[i];
	}

	void set_coeff(unsigned i, WeylPoly p)
	{
		if (i >= coeffs_.size())
			throw std::out_of_range("TruncatedSeries: coefficient index beyond order");
		coeffs_[i] = std::move(p);
	}

	void add_to_coeff(unsigned i, const WeylPoly& p)
	{
		if (i >= coeffs_.size())
			throw std::out_of_range("TruncatedSeries: coefficient index beyond order");
		coeffs_[i] += p;
	}

	bool is_zero() const
	{
		for (const auto& c : coeffs_)
			if (!c.is_zero())
				return false;
		return true;
	}

	friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

	TruncatedSeries& operator+=(const TruncatedSeries& rhs)
	{
		require_same_order(*this, rhs);
		for (unsigned i = 0; i <= order(); ++i)
			coeffs_[i] += rhs.coeffs_[i];
		return *this;
	}
	TruncatedSeries& operator-=(const TruncatedSeries& rhs)
	{
		require_same_order(*this, rhs);
		for (unsigned i = 0; i <= order(); ++i)
			coeffs_[i] -= rhs.coeffs_[i];
		return *this;
	}
	friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
	friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }

	static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b)
	{
		if (a.order() != b.order())
			throw std::invalid_argument("TruncatedSeries: order mismatch");
	}

private:
	std::vector<WeylPoly> coeffs_; // coefficient of t^i at index i
};

/// The deformed twisting map alpha_t = e^{t d/dy}: the t^n coefficient of the
/// result is sum_{i+j=n} (1/i!) (d/dy)^i of the t^j coefficient of p.
inline TruncatedSeries alpha_t(const TruncatedSeries& p)
{
	const unsigned N = p.order();
	TruncatedSeries out(N);
	for (unsigned j = 0; j <= N; ++j)
	{
		WeylPoly deriv = p.coeff(j);
		Scalar inv_factorial = 1;
		for (unsigned i = 0; j + i <= N; ++i)
		{
			if (i > 0)
			{
				deriv = d_dy(deriv);
				inv_factorial /= Scalar(i);
			}
			if (deriv.is_zero())
				break;
			out.add_to_coeff(j + i, inv_factorial * deriv);
		}
	}
	return out;
}

/// The deformed product ·_t = alpha_t ∘ ·_0, where ·_0 is the associative
/// product of A_1 extended coefficientwise.
inline TruncatedSeries star_t(const TruncatedSeries& p, const TruncatedSeries& q)
{
	TruncatedSeries::require_same_order(p, q);
	const unsigned N = p.order();
	TruncatedSeries prod(N);
	for (unsigned j = 0; j <= N; ++j)
	{
		if (p.coeff(j).is_zero())
			continue;
		for (unsigned l = 0; j + l <= N; ++l)
			prod.add_to_coeff(j + l, assoc_mul(p.coeff(j), q.coeff(l)));
	}
	return alpha_t(prod);
}

/// The deformed bracket [p, q]_t = p ·_t q - q ·_t p = alpha_t([p, q]_0).
inline TruncatedSeries bracket_t(const TruncatedSeries& p, const TruncatedSeries& q)
{
	return star_t(p, q) - star_t(q, p);
}

/// Index of the lowest t-degree where the two series differ, if any.
inline std::optional<unsigned> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b)
{
	TruncatedSeries::require_same_order(a, b);
	for (unsigned i = 0; i <= a.order(); ++i)
		if (a.coeff(i) != b.coeff(i))
			return i;
	return std::nullopt;
}

struct SeriesVerdict {
	bool passed = true;
	std::optional<unsigned> failing_degree;
	WeylPoly lhs; // coefficients at the failing degree
	WeylPoly rhs;

	explicit operator bool() const { return passed; }
};

/// Hom-associativity of the deformation, coefficientwise through the order:
///   alpha_t(a) ·_t (b ·_t c) = (a ·_t b) ·_t alpha_t(c).
inline SeriesVerdict check_hom_assoc_t(const TruncatedSeries& a, const TruncatedSeries& b, const TruncatedSeries& c)
{
	TruncatedSeries lhs = star_t(alpha_t(a), star_t(b, c));
	TruncatedSeries rhs = star_t(star_t(a, b), alpha_t(c));
	if (auto deg = first_mismatch(lhs, rhs))
		return {false, deg, lhs.coeff(*deg), rhs.coeff(*deg)};
	return {};
}

/// Hom-Jacobi identity of the induced hom-Lie deformation:
///   [alpha_t(a), [b,c]_t]_t + [alpha_t(c), [a,b]_t]_t + [alpha_t(b), [c,a]_t]_t = 0.
inline SeriesVerdict check_hom_jacobi_t(const TruncatedSeries& a, const TruncatedSeries& b, const TruncatedSeries& c)
{
	TruncatedSeries sum = bracket_t(alpha_t(a), bracket_t(b, c));
	sum += bracket_t(alpha_t(c), bracket_t(a, b));
	sum += bracket_t(alpha_t(b), bracket_t(c, a));
	for (unsigned i = 0; i <= sum.order(); ++i)
		if (!sum.coeff(i).is_zero())
			return {false, i, sum.coeff(i), WeylPoly{}};
	return {};
}

/// Evaluates the series at a rational value of t.
inline WeylPoly evaluate_at(const TruncatedSeries& s, const Scalar& t)
{
	WeylPoly out;
	Scalar tpow = 1;
	for (unsigned i = 0; i <= s.order(); ++i)
	{
		out += tpow * s.coeff(i);
		tpow *= t;
	}
	return out;
}

} // namespace homweyl
