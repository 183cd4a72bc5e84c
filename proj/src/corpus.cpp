#include "germlab/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace germlab {

namespace {

using njson = nlohmann::json;

[[noreturn]] void fail(const std::string& path, std::size_t line, const std::string& what) {
    throw CorpusError(path + ":" + std::to_string(line) + ": " + what);
}

std::optional<GermStatus> status_from_string(const std::string& s) {
    if (s == "OK") return GermStatus::Ok;
    if (s == "SMOOTH") return GermStatus::Smooth;
    if (s == "NOT_ISOLATED") return GermStatus::NotIsolated;
    if (s == "INPUT_ERROR") return GermStatus::InputError;
    return std::nullopt;
}

std::size_t require_count(const njson& v, const std::string& path, std::size_t line,
                          const std::string& field) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail(path, line, "field '" + field + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

GermSpec parse_line(const std::string& text, const std::string& path, std::size_t line) {
    njson j;
    try {
        j = njson::parse(text);
    } catch (const njson::parse_error& e) {
        fail(path, line, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) fail(path, line, "each corpus line must be a JSON object");

    GermSpec spec;
    for (const auto& [key, value] : j.items()) {
        if (key == "name") {
            if (!value.is_string() || value.get<std::string>().empty())
                fail(path, line, "field 'name' must be a nonempty string");
            spec.name = value.get<std::string>();
        } else if (key == "vars") {
            if (!value.is_array() || value.empty())
                fail(path, line, "field 'vars' must be a nonempty array of names");
            for (const auto& v : value) {
                if (!v.is_string() || v.get<std::string>().empty())
                    fail(path, line, "field 'vars' must contain nonempty strings");
                spec.vars.push_back(v.get<std::string>());
            }
            std::set<std::string> uniq(spec.vars.begin(), spec.vars.end());
            if (uniq.size() != spec.vars.size())
                fail(path, line, "field 'vars' must contain distinct names");
        } else if (key == "poly") {
            if (!value.is_string()) fail(path, line, "field 'poly' must be a string");
            spec.poly = value.get<std::string>();
        } else if (key == "expected") {
            if (!value.is_object()) fail(path, line, "field 'expected' must be an object");
            for (const auto& [ek, ev] : value.items()) {
                if (ek == "mu")
                    spec.expected.mu = require_count(ev, path, line, "expected.mu");
                else if (ek == "tau")
                    spec.expected.tau = require_count(ev, path, line, "expected.tau");
                else if (ek == "m")
                    spec.expected.m = require_count(ev, path, line, "expected.m");
                else if (ek == "nu") {
                    if (ev.is_number_integer())
                        spec.expected.nu = Int(static_cast<long>(ev.get<long long>()));
                    else if (ev.is_string())
                        spec.expected.nu = Int(ev.get<std::string>());
                    else
                        fail(path, line, "field 'expected.nu' must be an integer");
                } else if (ek == "status") {
                    if (!ev.is_string()) fail(path, line, "field 'expected.status' must be a string");
                    auto st = status_from_string(ev.get<std::string>());
                    if (!st) fail(path, line, "unknown status '" + ev.get<std::string>() + "'");
                    spec.expected.status = st;
                } else {
                    fail(path, line, "unknown field 'expected." + ek + "'");
                }
            }
        } else if (key == "tags") {
            if (!value.is_array()) fail(path, line, "field 'tags' must be an array of strings");
            for (const auto& t : value) {
                if (!t.is_string()) fail(path, line, "field 'tags' must contain strings");
                spec.tags.push_back(t.get<std::string>());
            }
        } else {
            fail(path, line, "unknown field '" + key + "'");
        }
    }

    if (spec.name.empty()) fail(path, line, "missing field 'name'");
    if (spec.vars.empty()) fail(path, line, "missing field 'vars'");
    if (spec.poly.empty()) fail(path, line, "missing field 'poly'");

    try {
        Polynomial f = spec.parse();
        if (f.constant_term() != 0) fail(path, line, "germ must vanish at the origin");
        if (f == Polynomial::zero(f.n())) fail(path, line, "germ must be nonzero");
    } catch (const ParseError& e) {
        fail(path, line, std::string("poly does not parse: ") + e.what());
    }
    return spec;
}

}  // namespace

bool GermSpec::has_tag(const std::string& t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::vector<GermSpec> parse_corpus(std::istream& in, const std::string& display_path) {
    std::vector<GermSpec> out;
    std::string line;
    std::size_t lineno = 0;
    std::set<std::string> names;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        GermSpec spec = parse_line(line, display_path, lineno);
        if (!names.insert(spec.name).second)
            fail(display_path, lineno, "duplicate germ name '" + spec.name + "'");
        out.push_back(std::move(spec));
    }
    return out;
}

std::vector<GermSpec> read_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorpusError(path + ": cannot open corpus file");
    return parse_corpus(in, path);
}

}  // namespace germlab
