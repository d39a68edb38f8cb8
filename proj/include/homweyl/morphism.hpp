#pragma once

#include "homweyl/weyl.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace homweyl {

/// All basis monomials y^i x^j with i + j <= max_total_degree, as polynomials,
/// ordered by ascending total degree and descending y-degree within a degree:
/// bound 1 gives [1, y, x]. Count is (d+1)(d+2)/2.
inline std::vector<WeylPoly> enumerate_monomials(unsigned max_total_degree)
{
	std::vector<WeylPoly> out;
	out.reserve((max_total_degree + 1) * (max_total_degree + 2) / 2);
	for (unsigned d = 0; d <= max_total_degree; ++d)
		for (unsigned i = d + 1; i-- > 0;)
			out.push_back(WeylPoly::monomial(i, d - i));
	return out;
}

/// Candidate homomorphism A_1^k -> A_1^l, determined by the images of the
/// generators. The extension to all of A_1 sends y^i x^j to fy^i · fx^j with
/// the associative product of the target.
struct GenMorphism {
	Scalar source_k;
	Scalar target_l;
	WeylPoly fx;
	WeylPoly fy;
};

inline GenMorphism identity_morphism(const Scalar& k = 0)
{
	return {k, k, WeylPoly::x(), WeylPoly::y()};
}

namespace detail {

inline std::vector<WeylPoly> powers_of(const WeylPoly& base, unsigned max_exp)
{
	std::vector<WeylPoly> pow(max_exp + 1);
	pow[0] = WeylPoly::one();
	for (unsigned i = 1; i <= max_exp; ++i)
		pow[i] = assoc_mul(pow[i - 1], base);
	return pow;
}

} // namespace detail

inline WeylPoly apply_morphism(const GenMorphism& m, const WeylPoly& p)
{
	unsigned max_y = 0, max_x = 0;
	for (const auto& [mono, c] : p.terms())
	{
		max_y = std::max(max_y, mono.y);
		max_x = std::max(max_x, mono.x);
	}
	const auto fy_pow = detail::powers_of(m.fy, max_y);
	const auto fx_pow = detail::powers_of(m.fx, max_x);
	WeylPoly out;
	for (const auto& [mono, c] : p.terms())
		out += c * assoc_mul(fy_pow[mono.y], fx_pow[mono.x]);
	return out;
}

/// The four defining clauses of a hom-algebra morphism candidate, labelled as
/// in check_morphism's contract:
///   (a) [fx, fy] = 1 in the target,
///   (b) alpha_l(fx) = fx,
///   (c) alpha_l(fy) = fy + k,
///   (d) f(a·b) = f(a)·f(b) on basis monomials up to the degree bound.
enum class MorphismClause { commutator_is_one, twist_fixes_fx, twist_shifts_fy, multiplicative };

inline std::string_view clause_label(MorphismClause c)
{
	switch (c)
	{
	case MorphismClause::commutator_is_one: return "(a)";
	case MorphismClause::twist_fixes_fx: return "(b)";
	case MorphismClause::twist_shifts_fy: return "(c)";
	case MorphismClause::multiplicative: return "(d)";
	}
	return "?";
}

inline std::string_view clause_description(MorphismClause c)
{
	switch (c)
	{
	case MorphismClause::commutator_is_one: return "commutator(fx, fy) = 1";
	case MorphismClause::twist_fixes_fx: return "alpha_l(fx) = fx";
	case MorphismClause::twist_shifts_fy: return "alpha_l(fy) = fy + k";
	case MorphismClause::multiplicative: return "f(a.b) = f(a).f(b) on basis monomials";
	}
	return "?";
}

struct MorphismVerdict {
	bool passed = true;
	std::optional<MorphismClause> violated;
	WeylPoly lhs; // sides of the first failed equation
	WeylPoly rhs;
	std::optional<std::pair<WeylPoly, WeylPoly>> witness; // basis pair, clause (d)

	explicit operator bool() const { return passed; }
};

/// Checks the morphism clauses. The twist conditions (b) and (c) are
/// evaluated before (a) and (d): they are the conditions of the underlying
/// lemma, and their failure is the structural reason a candidate misses the
/// classification. "First violated clause" refers to this evaluation order.
inline MorphismVerdict check_morphism(const GenMorphism& m, unsigned degree_bound)
{
	if (degree_bound < 2)
		throw std::invalid_argument("check_morphism: degree_bound must be >= 2");
	const AlgebraCtx target{m.target_l};

	MorphismVerdict v;
	auto fail = [&](MorphismClause clause, WeylPoly lhs, WeylPoly rhs) {
		v.passed = false;
		v.violated = clause;
		v.lhs = std::move(lhs);
		v.rhs = std::move(rhs);
		return v;
	};

	if (WeylPoly afx = alpha(target, m.fx); afx != m.fx)
		return fail(MorphismClause::twist_fixes_fx, afx, m.fx);
	const WeylPoly shifted = m.fy + WeylPoly(m.source_k);
	if (WeylPoly afy = alpha(target, m.fy); afy != shifted)
		return fail(MorphismClause::twist_shifts_fy, afy, shifted);
	if (WeylPoly comm = commutator(m.fx, m.fy); comm != WeylPoly::one())
		return fail(MorphismClause::commutator_is_one, comm, WeylPoly::one());

	const auto basis = enumerate_monomials(degree_bound);
	const auto fy_pow = detail::powers_of(m.fy, 2 * degree_bound);
	const auto fx_pow = detail::powers_of(m.fx, 2 * degree_bound);
	auto image = [&](const WeylPoly& p) {
		WeylPoly out;
		for (const auto& [mono, c] : p.terms())
			out += c * assoc_mul(fy_pow[mono.y], fx_pow[mono.x]);
		return out;
	};
	std::vector<WeylPoly> basis_image(basis.size());
	for (std::size_t i = 0; i < basis.size(); ++i)
		basis_image[i] = image(basis[i]);
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = 0; j < basis.size(); ++j)
		{
			WeylPoly lhs = image(assoc_mul(basis[i], basis[j]));
			WeylPoly rhs = assoc_mul(basis_image[i], basis_image[j]);
			if (lhs != rhs)
			{
				fail(MorphismClause::multiplicative, std::move(lhs), std::move(rhs));
				v.witness = {basis[i], basis[j]};
				return v;
			}
		}
	return v;
}

/// Substitutes u for x in an element of K[x].
inline WeylPoly substitute_x(const WeylPoly& p, const WeylPoly& u)
{
	unsigned max_x = 0;
	for (const auto& [mono, c] : p.terms())
	{
		if (mono.y != 0)
			throw std::invalid_argument("substitute_x: polynomial must lie in K[x]");
		max_x = std::max(max_x, mono.x);
	}
	const auto u_pow = detail::powers_of(u, max_x);
	WeylPoly out;
	for (const auto& [mono, c] : p.terms())
		out += c * u_pow[mono.x];
	return out;
}

/// An isomorphism A_1^k -> A_1^l of the classified shape
///   fx = (l/k) x + c,   fy = (k/l) y + p(x),
/// with its parameters retained so it can be inverted exactly.
struct ClassifiedIso {
	Scalar k;
	Scalar l;
	Scalar c;
	WeylPoly p; // element of K[x]

	GenMorphism morphism() const
	{
		return {k, l, WeylPoly::x() * (l / k) + WeylPoly(c), WeylPoly::y() * (k / l) + p};
	}
	operator GenMorphism() const { return morphism(); }
};

inline ClassifiedIso classified_isomorphism(const Scalar& k, const Scalar& l, const Scalar& c, const WeylPoly& p)
{
	if (k == 0 || l == 0)
		throw std::invalid_argument("classified_isomorphism: requires k != 0 and l != 0");
	if (!is_x_only(p))
		throw std::invalid_argument("classified_isomorphism: p must lie in K[x]");
	return {k, l, c, p};
}

/// Inverse of a classified isomorphism:
///   g(x) = (k/l)(x - c),   g(y) = (l/k)(y - p(g(x))),
/// itself classified, from A_1^l to A_1^k.
inline ClassifiedIso invert_classified(const ClassifiedIso& m)
{
	const WeylPoly gx = (WeylPoly::x() - WeylPoly(m.c)) * (m.k / m.l);
	const WeylPoly p_at_gx = substitute_x(m.p, gx);
	return {m.l, m.k, -(m.k / m.l) * m.c, -(m.l / m.k) * p_at_gx};
}

/// outer ∘ inner; generator images are pushed through the outer morphism.
inline GenMorphism compose(const GenMorphism& outer, const GenMorphism& inner)
{
	if (inner.target_l != outer.source_k)
		throw std::invalid_argument("compose: inner target parameter must equal outer source parameter");
	return {inner.source_k, outer.target_l, apply_morphism(outer, inner.fx), apply_morphism(outer, inner.fy)};
}

/// x -> ax + by, y -> cx + dy with ad - bc = 1; an automorphism generator of
/// the associative Weyl algebra (k = l = 0).
inline GenMorphism linear_automorphism(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d)
{
	if (a * d - b * c != 1)
		throw std::invalid_argument("linear_automorphism: determinant ad - bc must equal 1");
	return {0, 0, WeylPoly::x() * a + WeylPoly::y() * b, WeylPoly::x() * c + WeylPoly::y() * d};
}

/// x -> x, y -> y + p(x); the other automorphism generator family of A_1.
inline GenMorphism triangular_automorphism(const WeylPoly& p)
{
	if (!is_x_only(p))
		throw std::invalid_argument("triangular_automorphism: p must lie in K[x]");
	return {0, 0, WeylPoly::x(), WeylPoly::y() + p};
}

/// The derivation delta = [cy + p(x), ·] on A_1^k, p in K[x]. Equivalently
/// alpha_k^{-1} ∘ [cy + p(x), ·]_* ; these are the only derivations of A_1^k
/// for k != 0.
struct DerivationSpec {
	AlgebraCtx ctx;
	Scalar c;
	WeylPoly p;

	DerivationSpec(AlgebraCtx ctx_, Scalar c_, WeylPoly p_)
	    : ctx(std::move(ctx_)), c(std::move(c_)), p(std::move(p_))
	{
		if (!is_x_only(p))
			throw std::invalid_argument("DerivationSpec: p must lie in K[x]");
	}

	WeylPoly generator() const { return WeylPoly::y() * c + p; }
};

inline WeylPoly apply_derivation(const DerivationSpec& d, const WeylPoly& q)
{
	return commutator(d.generator(), q);
}

using LinearOp = std::function<WeylPoly(const WeylPoly&)>;

struct LeibnizVerdict {
	bool passed = true;
	std::optional<std::pair<WeylPoly, WeylPoly>> witness; // basis pair (a, b)
	WeylPoly lhs; // delta(a * b) at the witness
	WeylPoly rhs; // delta(a) * b + a * delta(b) at the witness

	explicit operator bool() const { return passed; }
};

/// Probes the star-Leibniz law delta(a*b) = delta(a)*b + a*delta(b) on all
/// pairs of basis monomials of total degree <= degree_bound. The caller
/// guarantees linearity of op, so passing pairs extend bilinearly.
inline LeibnizVerdict is_derivation(const AlgebraCtx& ctx, const LinearOp& op, unsigned degree_bound)
{
	if (degree_bound < 2)
		throw std::invalid_argument("is_derivation: degree_bound must be >= 2");
	const auto basis = enumerate_monomials(degree_bound);
	std::vector<WeylPoly> image(basis.size());
	for (std::size_t i = 0; i < basis.size(); ++i)
		image[i] = op(basis[i]);
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = 0; j < basis.size(); ++j)
		{
			WeylPoly lhs = op(star_mul(ctx, basis[i], basis[j]));
			WeylPoly rhs = star_mul(ctx, image[i], basis[j]) + star_mul(ctx, basis[i], image[j]);
			if (lhs != rhs)
				return {false, std::pair{basis[i], basis[j]}, std::move(lhs), std::move(rhs)};
		}
	return {};
}

} // namespace homweyl
