#pragma once

#include "finpres/report.h"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace finpres {

using SuiteParams = std::map<std::string, std::string>;

class UnknownSuite : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

class InvalidParameter : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

/// stallings, roos, bs, abels, lemma22, lemma32, witt, sw, hopf, twisted.
std::vector<std::string> suite_names();
/// Parameter names accepted by a suite, with their defaults.
std::map<std::string, std::string> suite_defaults(const std::string &name);

/// Runs a suite. The report depends only on (name, params, seed); parameters
/// missing from params take their defaults and are listed in the report.
SuiteReport run_suite(const std::string &name, const SuiteParams &params, std::uint64_t seed);

} // namespace finpres
