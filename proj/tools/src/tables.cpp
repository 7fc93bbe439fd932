#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "polyconst/cli.hpp"
#include "polyconst/constants.hpp"
#include "polyconst/objectives.hpp"
#include "polyconst/parallel.hpp"
#include "polyconst/sup_norm.hpp"

namespace polyconst::cli {

namespace {

std::string format_number(double v, bool full) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*g", full ? 17 : 6, v);
  return buf.data();
}

std::string cell_text(const Cell& c, bool full) {
  if (std::holds_alternative<double>(c)) return format_number(std::get<double>(c), full);
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return "---";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::json cell_json(const Cell& c, bool full) {
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    if (!std::isfinite(v)) return format_number(v, full);
    if (v == std::trunc(v) && std::abs(v) < 1e15) return static_cast<std::int64_t>(v);
    // Round-trip through the printed digits so JSON matches text and CSV.
    return std::strtod(format_number(v, full).c_str(), nullptr);
  }
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

Cell opt_cell(const std::optional<double>& v) {
  if (v) return *v;
  return {};
}

const std::array<double, 9> kP24{2.2, 2.4, 2.6, 2.8, 3.0, 3.2, 3.4, 3.6, 3.8};
const std::array<double, 11> kP4Inf{4, 5, 6, 7, 8, 9, 12, 25, 50, 150, 250};

}  // namespace

void write_table(std::ostream& out, const Table& table, Format format, bool full) {
  switch (format) {
    case Format::Csv: {
      for (std::size_t j = 0; j < table.columns.size(); ++j) out << (j ? "," : "") << csv_escape(table.columns[j]);
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_escape(cell_text(row[j], full));
        out << '\n';
      }
      return;
    }
    case Format::Json: {
      auto arr = nlohmann::json::array();
      for (const auto& row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t j = 0; j < row.size(); ++j) obj[table.columns[j]] = cell_json(row[j], full);
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << '\n';
      return;
    }
    case Format::Text: {
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t j = 0; j < table.columns.size(); ++j) width[j] = table.columns[j].size();
      for (const auto& row : table.rows) {
        auto& r = cells.emplace_back();
        for (std::size_t j = 0; j < row.size(); ++j) {
          r.push_back(cell_text(row[j], full));
          width[j] = std::max(width[j], r.back().size());
        }
      }
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t j = 0; j < r.size(); ++j) {
          const bool last = j + 1 == r.size();
          out << r[j];
          if (!last) out << std::string(width[j] - r[j].size() + 2, ' ');
        }
        out << '\n';
      };
      line(table.columns);
      for (const auto& r : cells) line(r);
      return;
    }
  }
}

Table make_table(const std::string& name) {
  Table t;
  const std::array<std::string, 2> ends{"1", "inf"};
  if (name == "k-table" || name == "K-table") {
    const bool big = name == "K-table";
    t.columns = {"q", "p", big ? "K" : "k"};
    for (const auto& q : ends) {
      for (const auto& p : ends) {
        const auto qe = parse_exponent(q);
        const auto pe = parse_exponent(p);
        t.rows.push_back({q, p, big ? big_K(qe, pe).value : little_k(qe, pe).value});
      }
    }
  } else if (name == "remark-q12") {
    t.columns = {"q", "max_f_q1", "argmax_f_q1", "max_f_qinf", "argmax_f_qinf"};
    for (const char* q : {"1", "4/3", "3/2", "1.75", "2"}) {
      const auto qe = parse_exponent(q);
      const auto a = maximize(Objective::make_fq1(qe), 2.0, 4.0);
      const auto b = maximize(Objective::make_fqinf(qe), 0.5, 1.0);
      t.rows.push_back({std::string(q), a.value, a.argmax, b.value, b.argmax});
    }
  } else if (name == "remark-p24") {
    t.columns = {"p", "q", "maximum", "argmax"};
    for (double p : kP24) {
      const auto r = hl_constant(ExtendedExponent(p));
      t.rows.push_back({p, hl_exponent(ExtendedExponent(p)).value(), r.value, opt_cell(r.attaining_parameter)});
    }
  } else if (name == "remark-p4inf") {
    t.columns = {"p", "maximum", "attainment"};
    for (double p : kP4Inf) {
      const auto r = hl_constant(ExtendedExponent(p));
      // f is constant at p = 4, so there is no attainment point.
      t.rows.push_back({p, r.value, p == 4.0 ? Cell{} : opt_cell(r.attaining_parameter)});
    }
  } else if (name == "hl-powers") {
    t.columns = {"degree", "m", "per_degree_ratio", "alpha", "abs_variant_ratio", "abs_variant_sup_norm"};
    for (int m : {2, 4, 10, 50, 200, 300, 400}) {
      const auto r = power_lower_bound(m);
      const auto a = absolute_power_variant(m);
      const double qn = sup_norm(*a.attaining_polynomial, ExtendedExponent(4.0 * m));
      t.rows.push_back({static_cast<double>(2 * m), static_cast<double>(m), r.scaled->per_degree_ratio(),
                        opt_cell(r.attaining_parameter), a.scaled->per_degree_ratio(), qn});
    }
  } else if (name == "phi-psi") {
    t.columns = {"p", "phi", "psi", "psi_minus_phi", "psi_argmax"};
    for (double p : kP4Inf) {
      const auto r = phi_psi(p);
      t.rows.push_back({p, r.phi, r.psi, r.psi - r.phi, r.psi_argmax});
    }
  } else if (name == "degree5") {
    t.columns = {"polynomial", "ratio", "coefficients"};
    const auto d = showcase_degree5();
    t.rows.push_back({std::string("asymmetric"), d.asymmetric.value, to_string(*d.asymmetric.attaining_polynomial)});
    t.rows.push_back({std::string("symmetric-listed"), d.symmetric_listed.value,
                      to_string(*d.symmetric_listed.attaining_polynomial)});
    t.rows.push_back({std::string("symmetric-optimized"), d.symmetric_optimized.value,
                      to_string(*d.symmetric_optimized.attaining_polynomial)});
  } else {
    throw std::invalid_argument("unknown table '" + name + "'");
  }
  return t;
}

Table make_figure(const std::string& name, double from, double to, int points, double p) {
  if (points < 1) throw std::invalid_argument("--points must be >= 1");
  if (!(from <= to)) throw std::invalid_argument("--from must not exceed --to");
  if (points == 1 && from != to) throw std::invalid_argument("one point needs --from equal to --to");
  auto node = [&](int i) { return points == 1 ? from : (i + 1 == points ? to : from + (to - from) * i / (points - 1)); };
  Table t;
  if (name == "phi-psi-diff") {
    if (!(from >= 4.0) || !std::isfinite(to)) throw std::invalid_argument("phi-psi-diff needs 4 <= from <= to < inf");
    t.columns = {"p", "psi_minus_phi"};
    const auto vals = parallel_map(static_cast<std::size_t>(points), [&](std::size_t i) {
      const auto r = phi_psi(node(static_cast<int>(i)));
      return r.psi - r.phi;
    });
    for (int i = 0; i < points; ++i) t.rows.push_back({node(i), vals[static_cast<std::size_t>(i)]});
  } else if (name == "f-curves") {
    if (!(from >= 0.0) || !(to <= 1.0)) throw std::invalid_argument("f-curves needs 0 <= from <= to <= 1");
    std::vector<double> ps;
    if (p > 0.0) {
      if (!(p > 2.0) || !(p <= 4.0)) throw std::invalid_argument("f-curves needs 2 < p <= 4");
      ps.push_back(p);
      t.columns = {"t", "f"};
    } else {
      ps.assign(kP24.begin(), kP24.end());
      t.columns = {"t"};
      for (double pp : ps) t.columns.push_back("f_p" + format_number(pp, false));
    }
    for (int i = 0; i < points; ++i) {
      std::vector<Cell> row{node(i)};
      for (double pp : ps) row.emplace_back(f_qp(ExtendedExponent(pp / (pp - 2.0)), pp, node(i)));
      t.rows.push_back(std::move(row));
    }
  } else {
    throw std::invalid_argument("unknown figure '" + name + "'");
  }
  return t;
}

}  // namespace polyconst::cli
