#include "finpres/word.h"
#include "finpres/rational.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace finpres {

Rational parse_rational(const std::string &text)
{
	auto valid = !text.empty();
	for (std::size_t i = 0; i < text.size() && valid; ++i)
	{
		char ch = text[i];
		if (std::isdigit(static_cast<unsigned char>(ch)))
			continue;
		if ((ch == '-' || ch == '+') && i == 0)
			continue;
		if (ch == '/' && i > 0 && i + 1 < text.size())
			continue;
		valid = false;
	}
	if (!valid)
		throw std::invalid_argument("not a rational: '" + text + "'");
	std::string body = text[0] == '+' ? text.substr(1) : text;
	Rational q;
	if (q.set_str(body, 10) != 0 || q.get_den() == 0)
		throw std::invalid_argument("not a rational: '" + text + "'");
	q.canonicalize();
	return q;
}

int Alphabet::find(const std::string &name) const
{
	auto it = std::find(names.begin(), names.end(), name);
	return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

AlphabetRef make_alphabet(int id, std::vector<std::string> names)
{
	return std::make_shared<const Alphabet>(Alphabet{id, std::move(names)});
}

namespace {

void require_same(const AlphabetRef &a, const AlphabetRef &b)
{
	if (a->id != b->id)
		throw AlphabetMismatch("words over different alphabets (" + std::to_string(a->id) + " vs " +
		                       std::to_string(b->id) + ")");
}

// Pushes one letter onto a reduced stack.
void push_reduced(std::vector<Generator> &stack, const Generator &g)
{
	if (!stack.empty() && stack.back().cancels(g))
		stack.pop_back();
	else
		stack.push_back(g);
}

} // namespace

GroupWord::GroupWord(AlphabetRef alphabet) : alphabet_(std::move(alphabet))
{
	if (!alphabet_)
		throw std::invalid_argument("null alphabet");
}

GroupWord GroupWord::reduce(AlphabetRef alphabet, std::span<const Generator> letters)
{
	GroupWord w(std::move(alphabet));
	w.letters_.reserve(letters.size());
	for (const auto &g : letters)
	{
		if (g.alphabet_id != w.alphabet_->id)
			throw AlphabetMismatch("letter from alphabet " + std::to_string(g.alphabet_id) +
			                       " in word over alphabet " + std::to_string(w.alphabet_->id));
		if (g.index < 0 || static_cast<std::size_t>(g.index) >= w.alphabet_->rank())
			throw std::out_of_range("generator index " + std::to_string(g.index) + " outside rank " +
			                        std::to_string(w.alphabet_->rank()));
		if (g.sign != 1 && g.sign != -1)
			throw std::invalid_argument("generator sign must be +1 or -1");
		push_reduced(w.letters_, g);
	}
	return w;
}

GroupWord GroupWord::power_of(AlphabetRef alphabet, int index, long exponent)
{
	int id = alphabet->id;
	std::vector<Generator> letters(static_cast<std::size_t>(exponent < 0 ? -exponent : exponent),
	                               Generator{id, index, exponent < 0 ? -1 : 1});
	return reduce(std::move(alphabet), letters);
}

GroupWord GroupWord::operator*(const GroupWord &o) const
{
	require_same(alphabet_, o.alphabet_);
	GroupWord w = *this;
	for (const auto &g : o.letters_)
		push_reduced(w.letters_, g);
	return w;
}

GroupWord GroupWord::inverse() const
{
	GroupWord w(alphabet_);
	w.letters_.reserve(letters_.size());
	for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
		w.letters_.push_back(it->inverse());
	return w;
}

GroupWord GroupWord::pow(long exponent) const
{
	GroupWord base = exponent < 0 ? inverse() : *this;
	GroupWord result(alphabet_);
	for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
		result = result * base;
	return result;
}

bool GroupWord::operator==(const GroupWord &o) const
{
	return alphabet_->id == o.alphabet_->id && letters_ == o.letters_;
}

bool GroupWord::operator<(const GroupWord &o) const
{
	if (alphabet_->id != o.alphabet_->id)
		return alphabet_->id < o.alphabet_->id;
	if (letters_.size() != o.letters_.size())
		return letters_.size() < o.letters_.size();
	return letters_ < o.letters_;
}

std::string GroupWord::str() const
{
	if (letters_.empty())
		return "1";
	std::ostringstream out;
	std::size_t i = 0;
	while (i < letters_.size())
	{
		std::size_t j = i;
		while (j < letters_.size() && letters_[j] == letters_[i])
			++j;
		long power = static_cast<long>(j - i) * letters_[i].sign;
		if (i > 0)
			out << ' ';
		out << alphabet_->names[static_cast<std::size_t>(letters_[i].index)];
		if (power != 1)
			out << '^' << power;
		i = j;
	}
	return out.str();
}

GroupWord word_reduce(const AlphabetRef &alphabet, std::span<const Generator> letters)
{
	return GroupWord::reduce(alphabet, letters);
}

GroupWord word_mul(const GroupWord &u, const GroupWord &v) { return u * v; }

GroupWord word_inv(const GroupWord &u) { return u.inverse(); }

GroupWord conjugate(const GroupWord &w, const GroupWord &g) { return g.inverse() * w * g; }

GroupWord commutator(const GroupWord &u, const GroupWord &v)
{
	return u.inverse() * v.inverse() * u * v;
}

// ---------------------------------------------------------------------------
// parsing

ParseError::ParseError(std::size_t position, const std::string &message)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message), position_(position)
{
}

namespace {

bool is_name_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_name_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

class WordParser
{
public:
	WordParser(const AlphabetRef &alphabet, std::string_view text, std::size_t pos)
	    : alphabet_(alphabet), text_(text), pos_(pos)
	{
	}

	GroupWord word()
	{
		GroupWord w(alphabet_);
		skip_space();
		while (pos_ < text_.size() && starts_factor(text_[pos_]))
		{
			w = w * factor();
			skip_space();
		}
		return w;
	}

	std::size_t position() const { return pos_; }

	void skip_space()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

private:
	static bool starts_factor(char ch) { return is_name_start(ch) || ch == '1' || ch == '(' || ch == '['; }

	GroupWord factor()
	{
		GroupWord base = atom();
		skip_space();
		if (pos_ < text_.size() && text_[pos_] == '^')
		{
			++pos_;
			skip_space();
			base = base.pow(exponent());
		}
		return base;
	}

	long exponent()
	{
		std::size_t start = pos_;
		if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
			++pos_;
		std::size_t digits = pos_;
		while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		if (digits == pos_)
			throw ParseError(start, "expected integer exponent after '^'");
		try
		{
			return std::stol(std::string(text_.substr(start, pos_ - start)));
		}
		catch (const std::out_of_range &)
		{
			throw ParseError(start, "exponent out of range");
		}
	}

	void expect(char ch)
	{
		skip_space();
		if (pos_ >= text_.size() || text_[pos_] != ch)
			throw ParseError(pos_, std::string("expected '") + ch + "'");
		++pos_;
	}

	GroupWord atom()
	{
		char ch = text_[pos_];
		if (ch == '1')
		{
			++pos_;
			if (pos_ < text_.size() && is_name_char(text_[pos_]))
				throw ParseError(pos_ - 1, "generator names may not start with a digit");
			return GroupWord(alphabet_);
		}
		if (ch == '(')
		{
			++pos_;
			GroupWord inner = word();
			expect(')');
			return inner;
		}
		if (ch == '[')
		{
			++pos_;
			GroupWord u = word();
			expect(',');
			GroupWord v = word();
			expect(']');
			return commutator(u, v);
		}
		std::size_t start = pos_;
		while (pos_ < text_.size() && is_name_char(text_[pos_]))
			++pos_;
		std::string name(text_.substr(start, pos_ - start));
		int index = alphabet_->find(name);
		if (index < 0)
			throw UndeclaredGenerator(start, "undeclared generator '" + name + "'");
		return GroupWord::power_of(alphabet_, index, 1);
	}

	const AlphabetRef &alphabet_;
	std::string_view text_;
	std::size_t pos_;
};

} // namespace

GroupWord parse_word_at(const AlphabetRef &alphabet, std::string_view text, std::size_t &pos)
{
	WordParser parser(alphabet, text, pos);
	GroupWord w = parser.word();
	pos = parser.position();
	return w;
}

GroupWord parse_word(const AlphabetRef &alphabet, std::string_view text)
{
	WordParser parser(alphabet, text, 0);
	GroupWord w = parser.word();
	parser.skip_space();
	if (parser.position() != text.size())
		throw ParseError(parser.position(), std::string("unexpected character '") + text[parser.position()] + "'");
	return w;
}

} // namespace finpres
