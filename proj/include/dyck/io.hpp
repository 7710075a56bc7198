#pragma once

#include "dyck/baker.hpp"
#include "dyck/enumeration.hpp"
#include "dyck/measures.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace dyck::io {

using Json = nlohmann::ordered_json;

/// RFC 4180 field quoting; words contain commas, so they are always quoted.
std::string csv_field(const std::string& value);
std::vector<std::string> split_csv_line(const std::string& line);

/// Header "word", then one quoted word per line.
void write_word_csv_header(std::ostream& out);
void write_word_csv_row(std::ostream& out, std::span<const Symbol> w);
std::vector<Word> read_word_csv(std::istream& in, const Alphabet& alphabet);

/// Big integers as decimal strings; "enumerated" is omitted when absent.
Json to_json(const CountReport& report);

/// Columns n, cylinder, empirical, exact, abs_error.
void write_convergence_csv(std::ostream& out, const ConvergenceReport& report, int precision = 12);
Json to_json(const ConvergenceReport& report, int precision = 12);

/// Exact "p/q" strings for the point and multipliers, plus flags.
Json to_json(const ExactOrbit& orbit, const ExactParams& params);

/// Header "period,class,xu,xc" (planar) or "period,class,xu,xc,xs".
void write_scatter_csv(std::ostream& out, const Scatter& scatter, int precision = 12);
Json scatter_summary_json(const Scatter& scatter);

}  // namespace dyck::io
