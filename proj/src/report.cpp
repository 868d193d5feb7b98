#include "finpres/report.h"

#include <algorithm>
#include <sstream>

namespace finpres {

bool SuiteReport::passed() const
{
	return std::all_of(checks.begin(), checks.end(), [](const CheckRecord &c) { return c.pass; });
}

std::size_t SuiteReport::passed_count() const
{
	return static_cast<std::size_t>(
	    std::count_if(checks.begin(), checks.end(), [](const CheckRecord &c) { return c.pass; }));
}

void SuiteReport::add(std::string name, Json inputs, std::string expected, std::string actual, bool pass)
{
	checks.push_back({std::move(name), std::move(inputs), std::move(expected), std::move(actual), pass});
}

void SuiteReport::add_compare(std::string name, Json inputs, std::string expected, std::string actual)
{
	bool pass = expected == actual;
	add(std::move(name), std::move(inputs), std::move(expected), std::move(actual), pass);
}

Json SuiteReport::to_json() const
{
	Json out;
	out["suite"] = suite;
	out["parameters"] = Json::object();
	for (const auto &[k, v] : parameters)
		out["parameters"][k] = v;
	out["seed"] = seed;
	out["verdict"] = passed() ? "pass" : "fail";
	out["passed"] = passed_count();
	out["total"] = checks.size();
	Json list = Json::array();
	for (const auto &c : checks)
	{
		Json rec;
		rec["name"] = c.name;
		rec["inputs"] = c.inputs;
		rec["expected"] = c.expected;
		rec["actual"] = c.actual;
		rec["verdict"] = c.pass ? "pass" : "fail";
		list.push_back(std::move(rec));
	}
	out["checks"] = std::move(list);
	return out;
}

std::string SuiteReport::dump() const { return to_json().dump(2) + "\n"; }

std::string SuiteReport::summary() const
{
	std::ostringstream out;
	for (const auto &c : checks)
		if (!c.pass)
			out << "FAIL " << c.name << ' ' << c.inputs.dump() << ": expected " << c.expected << ", got " << c.actual
			    << '\n';
	out << suite << ": " << passed_count() << '/' << checks.size() << " checks passed ("
	    << (passed() ? "pass" : "fail") << ")\n";
	return out.str();
}

} // namespace finpres
