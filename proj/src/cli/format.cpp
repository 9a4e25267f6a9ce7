#include <algorithm>
#include <iomanip>

#include <json.hpp>

#include "transduce/cli.hpp"
#include "transduce/report.hpp"

namespace transduce::cli {

namespace {

std::string to_text(const decltype(Field::value)& v)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(x);
            } else if constexpr (std::is_same_v<T, long long>) {
                return std::to_string(x);
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else {
                return x;
            }
        },
        v);
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace

void render(std::ostream& os, const std::vector<Record>& records, OutputFormat format)
{
    switch (format) {
    case OutputFormat::table: {
        for (std::size_t r = 0; r < records.size(); ++r) {
            if (r > 0) {
                os << '\n';
            }
            std::size_t width = 0;
            for (const auto& f : records[r]) {
                width = std::max(width, f.key.size());
            }
            for (const auto& f : records[r]) {
                os << std::left << std::setw(static_cast<int>(width) + 2) << f.key << to_text(f.value) << '\n';
            }
        }
        break;
    }
    case OutputFormat::csv: {
        if (records.empty()) {
            break;
        }
        for (std::size_t i = 0; i < records.front().size(); ++i) {
            os << (i ? "," : "") << csv_escape(records.front()[i].key);
        }
        os << '\n';
        for (const auto& rec : records) {
            for (std::size_t i = 0; i < rec.size(); ++i) {
                os << (i ? "," : "") << csv_escape(to_text(rec[i].value));
            }
            os << '\n';
        }
        break;
    }
    case OutputFormat::json: {
        auto object = [](const Record& rec) {
            nlohmann::ordered_json j = nlohmann::ordered_json::object();
            for (const auto& f : rec) {
                std::visit([&](const auto& x) { j[f.key] = x; }, f.value);
            }
            return j;
        };
        if (records.size() == 1) {
            os << object(records.front()).dump(2) << '\n';
        } else {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& rec : records) {
                arr.push_back(object(rec));
            }
            os << arr.dump(2) << '\n';
        }
        break;
    }
    }
}

}  // namespace transduce::cli
