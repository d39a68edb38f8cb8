#pragma once

#include "homweyl/weyl.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace homweyl::expr {

/// Syntax error carrying the byte offset and the set of tokens that would
/// have been accepted at that position.
class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
	    : std::runtime_error(render(offset, expected, message)), offset_(offset), expected_(std::move(expected))
	{
	}

	std::size_t offset() const { return offset_; }
	const std::vector<std::string>& expected() const { return expected_; }

private:
	static std::string render(std::size_t offset, const std::vector<std::string>& expected,
	                          const std::string& message)
	{
		std::string out = "syntax error at byte " + std::to_string(offset) + ": " + message;
		if (!expected.empty())
		{
			out += " (expected ";
			for (std::size_t i = 0; i < expected.size(); ++i)
			{
				if (i > 0)
					out += ", ";
				out += expected[i];
			}
			out += ")";
		}
		return out;
	}

	std::size_t offset_;
	std::vector<std::string> expected_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinaryOp { add, subtract, dot, star };
enum class PowerOp { dot, star };

struct RationalLit {
	Scalar value;
};
struct GeneratorRef {
	char name; // 'x' or 'y'
};
struct Negate {
	ExprPtr operand;
};
struct Binary {
	BinaryOp op;
	ExprPtr lhs;
	ExprPtr rhs;
};
struct Power {
	PowerOp op; // "^" evaluates with the associative product, "*^" left-normed star
	ExprPtr base;
	unsigned exponent;
};

/// Abstract syntax tree over rationals, the generators x and y, unary minus,
/// sums, the two products "." (associative) and "*" (star), and powers.
struct Expr {
	std::variant<RationalLit, GeneratorRef, Negate, Binary, Power> node;
};

namespace detail {

enum class TokenKind { plus, minus, dot, star, caret, star_caret, lparen, rparen, slash, number, gen_x, gen_y, end };

struct Token {
	TokenKind kind;
	std::string text;
	std::size_t offset;
};

inline std::vector<Token> lex(std::string_view text)
{
	std::vector<Token> out;
	std::size_t i = 0;
	while (i < text.size())
	{
		const char ch = text[i];
		if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')
		{
			++i;
			continue;
		}
		const std::size_t at = i;
		switch (ch)
		{
		case '+': out.push_back({TokenKind::plus, "+", at}); ++i; continue;
		case '-': out.push_back({TokenKind::minus, "-", at}); ++i; continue;
		case '.': out.push_back({TokenKind::dot, ".", at}); ++i; continue;
		case '^': out.push_back({TokenKind::caret, "^", at}); ++i; continue;
		case '(': out.push_back({TokenKind::lparen, "(", at}); ++i; continue;
		case ')': out.push_back({TokenKind::rparen, ")", at}); ++i; continue;
		case '/': out.push_back({TokenKind::slash, "/", at}); ++i; continue;
		case 'x': out.push_back({TokenKind::gen_x, "x", at}); ++i; continue;
		case 'y': out.push_back({TokenKind::gen_y, "y", at}); ++i; continue;
		case '*':
			if (i + 1 < text.size() && text[i + 1] == '^')
			{
				out.push_back({TokenKind::star_caret, "*^", at});
				i += 2;
			}
			else
			{
				out.push_back({TokenKind::star, "*", at});
				++i;
			}
			continue;
		default: break;
		}
		if (ch >= '0' && ch <= '9')
		{
			std::size_t j = i;
			while (j < text.size() && text[j] >= '0' && text[j] <= '9')
				++j;
			out.push_back({TokenKind::number, std::string(text.substr(i, j - i)), at});
			i = j;
			continue;
		}
		throw ParseError(at, {"x", "y", "rational", "'('", "')'", "'+'", "'-'", "'.'", "'*'", "'^'", "'*^'"},
		                 std::string("unknown symbol '") + ch + "'");
	}
	out.push_back({TokenKind::end, "", text.size()});
	return out;
}

class Parser {
public:
	explicit Parser(std::string_view text) : tokens_(lex(text)) {}

	ExprPtr parse()
	{
		ExprPtr e = parse_expr();
		if (peek().kind != TokenKind::end)
			throw ParseError(peek().offset, {"'+'", "'-'", "'.'", "'*'", "'^'", "'*^'", "end of input"},
			                 "unexpected trailing input '" + peek().text + "'");
		return e;
	}

private:
	const Token& peek() const { return tokens_[pos_]; }
	Token advance() { return tokens_[pos_++]; }

	static bool starts_atom(TokenKind k)
	{
		return k == TokenKind::gen_x || k == TokenKind::gen_y || k == TokenKind::number ||
		       k == TokenKind::lparen;
	}

	ExprPtr parse_expr()
	{
		ExprPtr lhs = parse_term();
		while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus)
		{
			const BinaryOp op = advance().kind == TokenKind::plus ? BinaryOp::add : BinaryOp::subtract;
			lhs = std::make_shared<Expr>(Expr{Binary{op, lhs, parse_term()}});
		}
		return lhs;
	}

	// Juxtaposed atoms ("y x", "2 y^2") are accepted as implicit "."
	// products; the canonical printer emits exactly that form.
	ExprPtr parse_term()
	{
		ExprPtr lhs = parse_unary();
		for (;;)
		{
			if (peek().kind == TokenKind::dot || peek().kind == TokenKind::star)
			{
				const BinaryOp op = advance().kind == TokenKind::dot ? BinaryOp::dot : BinaryOp::star;
				lhs = std::make_shared<Expr>(Expr{Binary{op, lhs, parse_unary()}});
			}
			else if (starts_atom(peek().kind))
				lhs = std::make_shared<Expr>(Expr{Binary{BinaryOp::dot, lhs, parse_unary()}});
			else
				return lhs;
		}
	}

	ExprPtr parse_unary()
	{
		if (peek().kind == TokenKind::minus)
		{
			advance();
			return std::make_shared<Expr>(Expr{Negate{parse_unary()}});
		}
		return parse_power();
	}

	ExprPtr parse_power()
	{
		ExprPtr base = parse_atom();
		if (peek().kind == TokenKind::caret || peek().kind == TokenKind::star_caret)
		{
			const Token op = advance();
			const Token exp = peek();
			if (exp.kind != TokenKind::number)
				throw ParseError(exp.offset, {"natural number"},
				                 "exponent must be a natural number, found '" + exp.text + "'");
			advance();
			unsigned long value = 0;
			try
			{
				value = std::stoul(exp.text);
			}
			catch (const std::out_of_range&)
			{
				throw ParseError(exp.offset, {"natural number"}, "exponent out of range");
			}
			if (op.kind == TokenKind::star_caret && value == 0)
				throw ParseError(exp.offset, {"natural number >= 1"},
				                 "star power requires exponent >= 1 (1 is only a weak unit)");
			const PowerOp pow_op = op.kind == TokenKind::caret ? PowerOp::dot : PowerOp::star;
			return std::make_shared<Expr>(Expr{Power{pow_op, base, static_cast<unsigned>(value)}});
		}
		return base;
	}

	ExprPtr parse_atom()
	{
		const Token tok = peek();
		switch (tok.kind)
		{
		case TokenKind::gen_x:
			advance();
			return std::make_shared<Expr>(Expr{GeneratorRef{'x'}});
		case TokenKind::gen_y:
			advance();
			return std::make_shared<Expr>(Expr{GeneratorRef{'y'}});
		case TokenKind::number:
		{
			advance();
			Scalar value{tok.text};
			if (peek().kind == TokenKind::slash)
			{
				advance();
				const Token den = peek();
				if (den.kind != TokenKind::number)
					throw ParseError(den.offset, {"positive integer"},
					                 "denominator must be a positive integer, found '" + den.text + "'");
				advance();
				const Scalar d{den.text};
				if (d == 0)
					throw ParseError(den.offset, {"positive integer"}, "denominator must be positive");
				value /= d;
			}
			return std::make_shared<Expr>(Expr{RationalLit{value}});
		}
		case TokenKind::lparen:
		{
			advance();
			ExprPtr inner = parse_expr();
			if (peek().kind != TokenKind::rparen)
				throw ParseError(peek().offset, {"')'"}, "unbalanced parenthesis");
			advance();
			return inner;
		}
		default:
			throw ParseError(tok.offset, {"x", "y", "rational", "'('"},
			                 "expected an atom, found '" + (tok.kind == TokenKind::end ? std::string("end of input") : tok.text) + "'");
		}
	}

	std::vector<Token> tokens_;
	std::size_t pos_ = 0;
};

template <class... Fns>
struct Overloaded : Fns... {
	using Fns::operator()...;
};
template <class... Fns>
Overloaded(Fns...) -> Overloaded<Fns...>;

} // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).parse(); }

/// Evaluates the tree in A_1^k: "." nodes use the associative product, "*"
/// nodes the star product, "^" iterated associative multiplication (with
/// ^0 = 1) and "*^" the left-normed star power.
inline WeylPoly eval(const AlgebraCtx& ctx, const Expr& e)
{
	return std::visit(
	    detail::Overloaded{
	        [](const RationalLit& r) { return WeylPoly(r.value); },
	        [](const GeneratorRef& g) { return g.name == 'x' ? WeylPoly::x() : WeylPoly::y(); },
	        [&](const Negate& n) { return -eval(ctx, *n.operand); },
	        [&](const Binary& b) {
		        const WeylPoly lhs = eval(ctx, *b.lhs);
		        const WeylPoly rhs = eval(ctx, *b.rhs);
		        switch (b.op)
		        {
		        case BinaryOp::add: return lhs + rhs;
		        case BinaryOp::subtract: return lhs - rhs;
		        case BinaryOp::dot: return assoc_mul(lhs, rhs);
		        case BinaryOp::star: return star_mul(ctx, lhs, rhs);
		        }
		        throw std::logic_error("unreachable");
	        },
	        [&](const Power& p) {
		        const WeylPoly base = eval(ctx, *p.base);
		        if (p.op == PowerOp::star)
			        return star_power_left(ctx, base, p.exponent);
		        WeylPoly out = WeylPoly::one();
		        for (unsigned i = 0; i < p.exponent; ++i)
			        out = assoc_mul(out, base);
		        return out;
	        },
	    },
	    e.node);
}

inline WeylPoly eval(const AlgebraCtx& ctx, const ExprPtr& e) { return eval(ctx, *e); }

/// Canonical rendering; uses only juxtaposition (implicit ".") so the output
/// re-parses to the same polynomial in any algebra context.
inline std::string format(const WeylPoly& p) { return to_string(p); }

} // namespace homweyl::expr
