#include "finpres/permutation.h"

#include <sstream>
#include <stdexcept>

namespace finpres {

std::string label_str(const Label &label)
{
	if (const int *i = std::get_if<int>(&label))
		return std::to_string(*i);
	return std::get<Symbol>(label) == Symbol::Star ? "*" : "@";
}

Permutation Permutation::identity(int r)
{
	if (r < 1)
		throw std::invalid_argument("permutation degree r must be at least 1");
	std::vector<int> image(static_cast<std::size_t>(r + 2));
	for (int i = 0; i < r + 2; ++i)
		image[static_cast<std::size_t>(i)] = i;
	return Permutation(r, std::move(image));
}

int Permutation::index_of(const Label &point) const
{
	if (const int *i = std::get_if<int>(&point))
	{
		if (*i < 0 || *i >= r_)
			throw std::out_of_range("label " + std::to_string(*i) + " outside {0.." + std::to_string(r_ - 1) + "}");
		return *i;
	}
	return std::get<Symbol>(point) == Symbol::Star ? r_ : r_ + 1;
}

Label Permutation::label_of(int index) const
{
	if (index < r_)
		return index;
	return index == r_ ? Symbol::Star : Symbol::Bullet;
}

Permutation Permutation::from_cycles(int r, const std::vector<std::vector<Label>> &cycles)
{
	Permutation p = identity(r);
	for (const auto &cycle : cycles)
	{
		std::vector<int> points;
		for (const auto &label : cycle)
		{
			int idx = p.index_of(label);
			for (int seen : points)
				if (seen == idx)
					throw std::invalid_argument("repeated label " + label_str(label) + " in cycle");
			points.push_back(idx);
		}
		if (points.size() < 2)
			continue;
		// cycle (p0 p1 ... pk) maps p_i -> p_{i+1}; compose on the right
		std::vector<int> step(p.image_.size());
		for (std::size_t i = 0; i < step.size(); ++i)
			step[i] = static_cast<int>(i);
		for (std::size_t i = 0; i < points.size(); ++i)
			step[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
		p = p.then(Permutation(r, std::move(step)));
	}
	return p;
}

Label Permutation::apply(const Label &point) const
{
	return label_of(image_[static_cast<std::size_t>(index_of(point))]);
}

Permutation Permutation::then(const Permutation &q) const
{
	if (q.r_ != r_)
		throw std::invalid_argument("composing permutations of different degree");
	std::vector<int> image(image_.size());
	for (std::size_t i = 0; i < image_.size(); ++i)
		image[i] = q.image_[static_cast<std::size_t>(image_[i])];
	return Permutation(r_, std::move(image));
}

Permutation Permutation::inverse() const
{
	std::vector<int> image(image_.size());
	for (std::size_t i = 0; i < image_.size(); ++i)
		image[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
	return Permutation(r_, std::move(image));
}

bool Permutation::is_identity() const
{
	for (std::size_t i = 0; i < image_.size(); ++i)
		if (image_[i] != static_cast<int>(i))
			return false;
	return true;
}

std::string Permutation::str() const
{
	std::ostringstream out;
	std::vector<bool> done(image_.size(), false);
	bool any = false;
	for (std::size_t start = 0; start < image_.size(); ++start)
	{
		if (done[start] || image_[start] == static_cast<int>(start))
			continue;
		any = true;
		out << '(';
		std::size_t i = start;
		bool first = true;
		while (!done[i])
		{
			done[i] = true;
			if (!first)
				out << ' ';
			out << label_str(label_of(static_cast<int>(i)));
			first = false;
			i = static_cast<std::size_t>(image_[i]);
		}
		out << ')';
	}
	return any ? out.str() : "()";
}

Permutation perm_from_cycles(int r, const std::vector<std::vector<Label>> &cycles)
{
	return Permutation::from_cycles(r, cycles);
}

Permutation perm_compose(const Permutation &p, const Permutation &q) { return p.then(q); }

bool perm_commutes(const Permutation &p, const Permutation &q) { return p.then(q) == q.then(p); }

} // namespace finpres
