#pragma once

#include <iosfwd>
#include <optional>

#include "germlab/parser.hpp"
#include "germlab/report.hpp"

namespace germlab {

// Corpus file problems: unreadable file, malformed line, unknown field,
// invalid germ.  The message carries "path:line:".
class CorpusError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ExpectedValues {
    std::optional<std::size_t> mu;
    std::optional<std::size_t> tau;
    std::optional<Int> nu;
    std::optional<std::uint64_t> m;
    std::optional<GermStatus> status;  // default OK
};

struct GermSpec {
    std::string name;
    std::vector<std::string> vars;
    std::string poly;
    ExpectedValues expected;
    std::vector<std::string> tags;

    Polynomial parse() const { return parse_poly(poly, vars); }
    bool has_tag(const std::string& t) const;
};

// JSON-lines, one GermSpec per line; blank lines and lines starting with
// '#' are skipped.  Every germ is validated eagerly (parses, vanishes at 0).
std::vector<GermSpec> read_corpus(const std::string& path);
std::vector<GermSpec> parse_corpus(std::istream& in, const std::string& display_path);

}  // namespace germlab
