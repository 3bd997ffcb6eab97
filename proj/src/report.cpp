#include "bernkit/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "bernkit/classical.hpp"
#include "bernkit/polybern.hpp"
#include "bernkit/seqcore.hpp"
#include "json.hpp"

namespace bernkit {

using json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::string_view, 9> kSequences = {
    "bernoulli", "euler", "cauchy1", "stirling1", "stirling2", "harmonic", "dibernoulli", "hw", "poly_bernoulli",
};

bool is_rational_key(std::string_view key) { return key == "x" || key == "z"; }

json params_json(const Params& params) {
  json out = json::object();
  for (const auto& [k, v] : params) {
    if (is_rational_key(k) || !is_integer(v)) {
      out[k] = to_string(v);
    } else {
      out[k] = v.get_num().get_si();
    }
  }
  return out;
}

std::string params_text(const Params& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ";";
    s += k + "=" + ((is_rational_key(k) || !is_integer(v)) ? to_string(v) : v.get_num().get_str());
  }
  return s;
}

json residue_json(const Residue& r) {
  return json{{"value", r.value.get_ui()}, {"modulus", r.modulus.get_ui()}};
}

std::string residue_text(const Residue& r) { return r.value.get_str() + " mod " + r.modulus.get_str(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void add_meta(json& doc, const std::optional<ReportMeta>& meta) {
  if (!meta) return;
  doc["meta"] = json{{"tool", "bernkit"}, {"command", meta->command}, {"generated", meta->generated}};
}

std::string text_meta(const std::optional<ReportMeta>& meta, std::string_view prefix) {
  if (!meta) return "";
  return std::string(prefix) + "bernkit " + meta->command + ", generated " + meta->generated + "\n";
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "markdown") return Format::Markdown;
  return std::nullopt;
}

std::vector<std::string_view> sequence_names() { return {kSequences.begin(), kSequences.end()}; }

SequenceTable compute_sequence(std::string_view name, unsigned n_max, const std::optional<Rat>& x,
                               const std::optional<unsigned>& p) {
  SequenceTable t;
  t.name = std::string(name);
  auto each = [&](unsigned first, auto&& f) {
    for (unsigned n = first; n <= n_max; ++n) t.rows.push_back({n, {f(n)}});
  };
  if (name == "bernoulli") {
    each(0, [](unsigned n) { return bernoulli(n); });
  } else if (name == "euler") {
    each(0, [](unsigned n) { return euler_number(n); });
  } else if (name == "cauchy1") {
    each(0, [](unsigned n) { return cauchy1(n); });
  } else if (name == "stirling1" || name == "stirling2") {
    t.triangle = true;
    const bool first = name == "stirling1";
    for (unsigned n = 0; n <= n_max; ++n) {
      std::vector<Rat> row;
      for (unsigned k = 0; k <= n; ++k) row.emplace_back(first ? stirling1(n, k) : stirling2(n, k));
      t.rows.push_back({n, std::move(row)});
    }
  } else if (name == "harmonic") {
    each(1, [](unsigned n) { return harmonic(n); });
  } else if (name == "dibernoulli") {
    each(0, [](unsigned n) { return dibernoulli(n); });
  } else if (name == "hw") {
    if (!x) throw std::invalid_argument("hw requires --x");
    t.params["x"] = *x;
    each(1, [&](unsigned n) { return hw(n, *x); });
  } else if (name == "poly_bernoulli") {
    if (!p || *p == 0) throw std::invalid_argument("poly_bernoulli requires --p >= 1");
    const Rat xv = x.value_or(Rat(0));
    t.params["p"] = Rat(*p);
    t.params["x"] = xv;
    each(0, [&](unsigned n) { return poly_bernoulli(n, *p, xv); });
  } else {
    throw UnknownSequence("unknown sequence: " + std::string(name));
  }
  return t;
}

std::string render_verify(std::span<const IdentityReport> reports, Format format,
                          const std::optional<ReportMeta>& meta) {
  std::size_t cases = 0;
  for (const IdentityReport& r : reports) cases += r.cases;
  const std::string suite = reports.size() == 1 ? reports.front().id : "identities";

  if (format == Format::Json) {
    json doc = json::object();
    add_meta(doc, meta);
    doc["suite"] = suite;
    doc["cases"] = cases;
    json failures = json::array();
    json notes = json::array();
    json summary = json::array();
    for (const IdentityReport& r : reports) {
      for (const Failure& f : r.failures) {
        failures.push_back(json{{"id", f.id},
                                {"params", params_json(f.params)},
                                {"lhs", to_string(f.lhs)},
                                {"rhs", f.rhs ? to_string(*f.rhs) : std::string("indeterminate")}});
      }
      for (const std::string& n : r.notes) notes.push_back(r.id + ": " + n);
      summary.push_back(json{{"id", r.id},
                             {"domain", r.domain},
                             {"cases", r.cases},
                             {"failures", r.failures.size()},
                             {"pass", r.pass()}});
    }
    doc["failures"] = std::move(failures);
    doc["notes"] = std::move(notes);
    doc["identities"] = std::move(summary);
    return dump(doc);
  }

  std::ostringstream out;
  if (format == Format::Csv) {
    out << text_meta(meta, "# ");
    out << "kind,id,params,cases,lhs,rhs,note\n";
    for (const IdentityReport& r : reports) {
      out << "summary," << r.id << ",," << r.cases << ",,," << (r.pass() ? "pass" : "fail") << "\n";
    }
    for (const IdentityReport& r : reports) {
      for (const Failure& f : r.failures) {
        out << "failure," << f.id << "," << csv_field(params_text(f.params)) << ",," << to_string(f.lhs) << ","
            << (f.rhs ? to_string(*f.rhs) : "indeterminate") << ",\n";
      }
    }
    for (const IdentityReport& r : reports) {
      for (const std::string& n : r.notes) out << "note," << r.id << ",,,,," << csv_field(n) << "\n";
    }
    return out.str();
  }

  if (meta) out << "<!-- bernkit " << meta->command << ", generated " << meta->generated << " -->\n\n";
  out << "# Identity suite: " << suite << "\n\n";
  out << "Cases: " << cases << "\n\n";
  out << "| id | domain | cases | failures | status |\n|---|---|---|---|---|\n";
  for (const IdentityReport& r : reports) {
    out << "| " << r.id << " | " << md_cell(r.domain) << " | " << r.cases << " | " << r.failures.size() << " | "
        << (r.pass() ? "pass" : "FAIL") << " |\n";
  }
  bool any = false;
  for (const IdentityReport& r : reports) any = any || !r.failures.empty();
  if (any) {
    out << "\n## Failures\n\n| id | params | lhs | rhs |\n|---|---|---|---|\n";
    for (const IdentityReport& r : reports) {
      for (const Failure& f : r.failures) {
        out << "| " << f.id << " | " << md_cell(params_text(f.params)) << " | " << to_string(f.lhs) << " | "
            << (f.rhs ? to_string(*f.rhs) : "indeterminate") << " |\n";
      }
    }
  }
  out << "\n## Notes\n\n";
  for (const IdentityReport& r : reports) {
    for (const std::string& n : r.notes) out << "- " << r.id << ": " << md_cell(n) << "\n";
  }
  return out.str();
}

std::string render_congruence(const PrimeSweepReport& report, Format format,
                              const std::optional<ReportMeta>& meta) {
  if (format == Format::Json) {
    json doc = json::object();
    add_meta(doc, meta);
    doc["suite"] = "congruence";
    doc["p_max"] = report.p_max;
    doc["cases"] = report.cases();
    json failures = json::array();
    json skipped = json::array();
    json summary = json::array();
    for (const CongruenceResult& r : report.results) {
      if (r.skipped) {
        skipped.push_back(json{{"id", r.id}, {"p", r.p}, {"reason", r.skip_reason}});
        continue;
      }
      if (!r.error.empty()) {
        failures.push_back(json{{"id", r.id}, {"params", json{{"p", r.p}}}, {"error", r.error}});
      }
      for (const CongruenceCheck& c : r.checks) {
        if (c.pass) continue;
        failures.push_back(json{{"id", r.id},
                                {"params", json{{"p", r.p}, {"check", c.label}}},
                                {"lhs", residue_json(c.lhs)},
                                {"rhs", residue_json(c.rhs)},
                                {"lhs_exact", to_string(c.lhs_exact)},
                                {"rhs_exact", to_string(c.rhs_exact)}});
      }
    }
    for (std::string_view id : congruence_ids()) {
      std::size_t run = 0, bad = 0;
      for (const CongruenceResult& r : report.results) {
        if (r.id != id || r.skipped) continue;
        ++run;
        if (!r.pass()) ++bad;
      }
      if (run == 0 && std::none_of(report.results.begin(), report.results.end(),
                                   [&](const CongruenceResult& r) { return r.id == id; })) {
        continue;
      }
      summary.push_back(json{{"id", id}, {"primes", run}, {"failures", bad}, {"pass", bad == 0}});
    }
    doc["failures"] = std::move(failures);
    doc["skipped"] = std::move(skipped);
    doc["notes"] = report.notes;
    doc["congruences"] = std::move(summary);
    return dump(doc);
  }

  std::ostringstream out;
  if (format == Format::Csv) {
    out << text_meta(meta, "# ");
    out << "id,p,check,status,lhs,rhs,lhs_exact,rhs_exact,note\n";
    for (const CongruenceResult& r : report.results) {
      if (r.skipped) {
        out << r.id << "," << r.p << ",,skipped,,,,," << csv_field(r.skip_reason) << "\n";
        continue;
      }
      if (!r.error.empty()) out << r.id << "," << r.p << ",,error,,,,," << csv_field(r.error) << "\n";
      for (const CongruenceCheck& c : r.checks) {
        out << r.id << "," << r.p << "," << csv_field(c.label) << "," << (c.pass ? "pass" : "fail") << ","
            << residue_text(c.lhs) << "," << residue_text(c.rhs) << "," << to_string(c.lhs_exact) << ","
            << to_string(c.rhs_exact) << ",\n";
      }
    }
    return out.str();
  }

  if (meta) out << "<!-- bernkit " << meta->command << ", generated " << meta->generated << " -->\n\n";
  out << "# Congruence sweep (odd primes p <= " << report.p_max << ")\n\n";
  out << "Cases: " << report.cases() << ", failures: " << report.failure_count() << "\n\n";
  out << "| id | p | status | detail |\n|---|---|---|---|\n";
  for (const CongruenceResult& r : report.results) {
    std::string status = r.skipped ? "skipped" : (r.pass() ? "pass" : "FAIL");
    std::string detail = r.skipped ? r.skip_reason : r.error;
    if (!r.skipped && r.error.empty()) {
      for (const CongruenceCheck& c : r.checks) {
        if (!c.pass) detail += c.label + ": " + residue_text(c.lhs) + " vs " + residue_text(c.rhs) + "; ";
      }
    }
    out << "| " << r.id << " | " << r.p << " | " << status << " | " << md_cell(detail) << " |\n";
  }
  if (!report.notes.empty()) {
    out << "\n## Notes\n\n";
    for (const std::string& n : report.notes) out << "- " << md_cell(n) << "\n";
  }
  return out.str();
}

std::string render_sequence(const SequenceTable& table, Format format, const std::optional<ReportMeta>& meta) {
  if (format == Format::Json) {
    json doc = json::object();
    add_meta(doc, meta);
    doc["sequence"] = table.name;
    doc["params"] = params_json(table.params);
    json values = json::array();
    for (const auto& [n, vals] : table.rows) {
      if (table.triangle) {
        json row = json::array();
        for (const Rat& v : vals) row.push_back(to_string(v));
        values.push_back(json{{"n", n}, {"row", std::move(row)}});
      } else {
        values.push_back(json{{"n", n}, {"value", to_string(vals.front())}});
      }
    }
    doc["values"] = std::move(values);
    return dump(doc);
  }
  std::ostringstream out;
  if (format == Format::Csv) {
    out << text_meta(meta, "# ");
    if (table.triangle) {
      out << "n,k,value\n";
      for (const auto& [n, vals] : table.rows) {
        for (std::size_t k = 0; k < vals.size(); ++k) out << n << "," << k << "," << to_string(vals[k]) << "\n";
      }
    } else {
      out << "n,value\n";
      for (const auto& [n, vals] : table.rows) out << n << "," << to_string(vals.front()) << "\n";
    }
    return out.str();
  }
  if (meta) out << "<!-- bernkit " << meta->command << ", generated " << meta->generated << " -->\n\n";
  out << "# " << table.name;
  if (!table.params.empty()) out << " (" << params_text(table.params) << ")";
  out << "\n\n";
  if (table.triangle) {
    out << "| n | row |\n|---|---|\n";
    for (const auto& [n, vals] : table.rows) {
      std::string row;
      for (const Rat& v : vals) row += (row.empty() ? "" : ", ") + to_string(v);
      out << "| " << n << " | " << row << " |\n";
    }
  } else {
    out << "| n | value |\n|---|---|\n";
    for (const auto& [n, vals] : table.rows) out << "| " << n << " | " << to_string(vals.front()) << " |\n";
  }
  return out.str();
}

std::string render_series(std::string_view name, const SeriesParams& params, const Egf& series, Format format,
                          const std::optional<ReportMeta>& meta) {
  Params shown;
  if (params.k) shown["k"] = Rat(*params.k);
  if (params.p) shown["p"] = Rat(*params.p);
  if (params.x) shown["x"] = *params.x;
  if (format == Format::Json) {
    json doc = json::object();
    add_meta(doc, meta);
    doc["series"] = std::string(name);
    doc["params"] = params_json(shown);
    doc["order"] = series.order();
    json ordinary = json::array(), egf = json::array();
    for (unsigned n = 0; n <= series.order(); ++n) {
      ordinary.push_back(to_string(series[n]));
      egf.push_back(to_string(series.egf(n)));
    }
    doc["ordinary"] = std::move(ordinary);
    doc["egf"] = std::move(egf);
    return dump(doc);
  }
  std::ostringstream out;
  if (format == Format::Csv) {
    out << text_meta(meta, "# ");
    out << "n,ordinary,egf\n";
    for (unsigned n = 0; n <= series.order(); ++n) {
      out << n << "," << to_string(series[n]) << "," << to_string(series.egf(n)) << "\n";
    }
    return out.str();
  }
  if (meta) out << "<!-- bernkit " << meta->command << ", generated " << meta->generated << " -->\n\n";
  out << "# " << name;
  if (!shown.empty()) out << " (" << params_text(shown) << ")";
  out << "\n\n| n | ordinary | egf |\n|---|---|---|\n";
  for (unsigned n = 0; n <= series.order(); ++n) {
    out << "| " << n << " | " << to_string(series[n]) << " | " << to_string(series.egf(n)) << " |\n";
  }
  return out.str();
}

}  // namespace bernkit
