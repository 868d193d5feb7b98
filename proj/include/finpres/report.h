#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace finpres {

using Json = nlohmann::ordered_json;

struct CheckRecord
{
	std::string name;
	Json inputs = Json::object();
	std::string expected;
	std::string actual;
	bool pass = false;
};

struct SuiteReport
{
	std::string suite;
	std::map<std::string, std::string> parameters;
	std::uint64_t seed = 0;
	std::vector<CheckRecord> checks;
	/// Wall time of the run. Kept out of to_json so reports are reproducible.
	double elapsed_seconds = 0;

	bool passed() const;
	std::size_t passed_count() const;

	void add(std::string name, Json inputs, std::string expected, std::string actual, bool pass);
	/// expected == actual.
	void add_compare(std::string name, Json inputs, std::string expected, std::string actual);

	Json to_json() const;
	/// to_json().dump(2) plus a trailing newline.
	std::string dump() const;
	/// One line per failing check and a total.
	std::string summary() const;
};

} // namespace finpres
