#pragma once

// Test-only oracles, independent of the library's arithmetic paths.
//
// The word oracle works in the free algebra K<x, y>: an element is a map
// from words over {x, y} to coefficients, multiplication is concatenation,
// and the normal form is reached by rewriting the factor "xy" into
// "yx" + (word with the two letters deleted) until every word has all y's
// before all x's. This is the defining presentation of A_1 and shares no
// code with the Ore-product implementation under test.

#include "homweyl/weyl.hpp"

#include <map>
#include <string>

namespace oracles {

using homweyl::Scalar;
using homweyl::WeylPoly;

using WordPoly = std::map<std::string, Scalar>;

inline void add_word(WordPoly& p, const std::string& w, const Scalar& c)
{
	if (c == 0)
		return;
	auto [it, inserted] = p.emplace(w, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == 0)
			p.erase(it);
	}
}

inline WordPoly normalize_words(WordPoly pending)
{
	WordPoly done;
	while (!pending.empty())
	{
		const auto it = pending.begin();
		const std::string w = it->first;
		const Scalar c = it->second;
		pending.erase(it);
		const std::size_t pos = w.find("xy");
		if (pos == std::string::npos)
		{
			add_word(done, w, c);
			continue;
		}
		std::string swapped = w;
		swapped[pos] = 'y';
		swapped[pos + 1] = 'x';
		add_word(pending, swapped, c);
		add_word(pending, w.substr(0, pos) + w.substr(pos + 2), c);
	}
	return done;
}

inline WordPoly to_words(const WeylPoly& p)
{
	WordPoly out;
	for (const auto& [m, c] : p.terms())
		add_word(out, std::string(m.y, 'y') + std::string(m.x, 'x'), c);
	return out;
}

inline WeylPoly from_normal_words(const WordPoly& p)
{
	WeylPoly out;
	for (const auto& [w, c] : p)
	{
		const std::size_t split = w.find('x');
		const std::size_t ydeg = split == std::string::npos ? w.size() : split;
		out.add_term({static_cast<unsigned>(ydeg), static_cast<unsigned>(w.size() - ydeg)}, c);
	}
	return out;
}

/// Product of two Weyl-algebra elements computed by word concatenation and
/// rewriting; the independent route for checking assoc_mul.
inline WeylPoly word_mul(const WeylPoly& a, const WeylPoly& b)
{
	WordPoly prod;
	for (const auto& [wa, ca] : to_words(a))
		for (const auto& [wb, cb] : to_words(b))
			add_word(prod, wa + wb, ca * cb);
	return from_normal_words(normalize_words(prod));
}

/// Star product through the word oracle: alpha_k applied to the word product.
inline WeylPoly word_star(const Scalar& k, const WeylPoly& a, const WeylPoly& b)
{
	return homweyl::alpha({k}, word_mul(a, b));
}

} // namespace oracles
