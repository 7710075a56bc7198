#include "dyck/io.hpp"

#include <istream>
#include <ostream>

namespace dyck::io {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (const char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

void write_word_csv_header(std::ostream& out) { out << "word\n"; }

void write_word_csv_row(std::ostream& out, std::span<const Symbol> w) {
  out << '"' << format_word(w) << "\"\n";
}

std::vector<Word> read_word_csv(std::istream& in, const Alphabet& alphabet) {
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != std::vector<std::string>{"word"}) {
    throw ParseError("word CSV must start with the header 'word'");
  }
  std::vector<Word> words;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 1) throw ParseError("word CSV row has " + std::to_string(fields.size()) + " fields");
    words.push_back(parse_word(fields[0], alphabet));
  }
  return words;
}

Json to_json(const CountReport& report) {
  Json j;
  j["M"] = report.M;
  j["n"] = report.n;
  j["class"] = to_string(report.filter);
  j["closed_form"] = report.closed_form.str();
  if (report.enumerated) j["enumerated"] = report.enumerated->str();
  return j;
}

void write_convergence_csv(std::ostream& out, const ConvergenceReport& report, int precision) {
  out << "n,cylinder,empirical,exact,abs_error\n";
  for (const auto& row : report.rows) {
    for (const auto& r : row.residuals) {
      out << row.n << ',' << csv_field(format_word(r.cylinder)) << ',' << to_decimal_string(r.empirical, precision)
          << ',' << to_decimal_string(r.exact, precision) << ',' << to_decimal_string(r.abs_error, precision) << '\n';
    }
  }
}

Json to_json(const ConvergenceReport& report, int precision) {
  Json j;
  j["M"] = report.M;
  j["cylinder_length"] = report.m;
  j["ensemble"] = to_string(report.ensemble);
  j["target"] = to_string(report.target);
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["n"] = row.n;
    r["sup_distance"] = to_decimal_string(row.sup_distance, precision);
    r["sup_distance_exact"] = to_fraction_string(row.sup_distance);
    Json residuals = Json::array();
    for (const auto& c : row.residuals) {
      residuals.push_back({{"cylinder", format_word(c.cylinder)},
                           {"empirical", to_decimal_string(c.empirical, precision)},
                           {"exact", to_decimal_string(c.exact, precision)},
                           {"abs_error", to_decimal_string(c.abs_error, precision)},
                           {"empirical_exact", to_fraction_string(c.empirical)},
                           {"exact_exact", to_fraction_string(c.exact)}});
    }
    r["residuals"] = std::move(residuals);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

namespace {

Json point_json(const Point3<Rational>& x) {
  return {{"xu", to_fraction_string(x(kU))}, {"xc", to_fraction_string(x(kC))}, {"xs", to_fraction_string(x(kS))}};
}

Json point_decimal_json(const Point3<Rational>& x) {
  return {{"xu", x(kU).convert_to<double>()}, {"xc", x(kC).convert_to<double>()}, {"xs", x(kS).convert_to<double>()}};
}

}  // namespace

Json to_json(const ExactOrbit& orbit, const ExactParams& params) {
  Json j;
  j["M"] = params.M;
  j["a"] = to_fraction_string(params.a);
  j["b"] = to_fraction_string(params.b);
  j["word"] = format_word(orbit.word);
  j["period"] = orbit.word.size();
  j["h"] = h_value(orbit.word);
  j["point"] = point_json(orbit.point);
  j["point_decimal"] = point_decimal_json(orbit.point);
  j["multipliers"] = {{"lambda_u", to_fraction_string(orbit.multipliers(kU))},
                      {"lambda_c", to_fraction_string(orbit.multipliers(kC))},
                      {"lambda_s", to_fraction_string(orbit.multipliers(kS))}};
  j["unstable_dim"] = orbit.unstable_dim;
  j["interior"] = orbit.interior;
  j["interior_planar"] = orbit.interior_planar;
  j["in_lambda"] = orbit.in_lambda;
  j["in_lambda_planar"] = orbit.in_lambda_planar;
  j["itinerary"] = format_word(itinerary(params, orbit.point, orbit.word.size()));
  return j;
}

void write_scatter_csv(std::ostream& out, const Scatter& scatter, int precision) {
  out << (scatter.planar ? "period,class,xu,xc\n" : "period,class,xu,xc,xs\n");
  for (const auto& row : scatter.rows) {
    out << row.period << ',' << to_string(row.cls) << ',' << to_decimal_string(row.xu, precision) << ','
        << to_decimal_string(row.xc, precision);
    if (!scatter.planar) out << ',' << to_decimal_string(row.xs, precision);
    out << '\n';
  }
}

Json scatter_summary_json(const Scatter& scatter) {
  Json periods = Json::array();
  for (const auto& s : scatter.summary) {
    periods.push_back({{"period", s.period},
                       {"class", to_string(s.cls)},
                       {"solved", s.solved},
                       {"rows", s.solved - s.boundary},
                       {"boundary", s.boundary}});
  }
  Json boundary = Json::array();
  for (const auto& row : scatter.boundary) boundary.push_back({{"period", row.period}, {"word", format_word(row.word)}});
  return {{"planar", scatter.planar}, {"periods", std::move(periods)}, {"boundary_words", std::move(boundary)}};
}

}  // namespace dyck::io
