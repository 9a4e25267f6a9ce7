#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace transduce::cli {

enum ExitCode : int { kOk = 0, kDataError = 1, kUsageError = 2 };

struct Environment
{
    // Value of TRANSDUCE_DB, consulted only when --db is absent.
    std::optional<std::string> db_path;
};

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

// One labelled output value. Keys carry SI units.
struct Field
{
    std::string key;
    std::variant<double, long long, std::string, bool> value;
};

using Record = std::vector<Field>;

enum class OutputFormat { table, csv, json };

// Table: one "key value" line per field. CSV: a header row then one row per
// record. JSON: an object, or an array of objects for several records.
void render(std::ostream& os, const std::vector<Record>& records, OutputFormat format);

}  // namespace transduce::cli
