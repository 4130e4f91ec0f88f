#include "apnkit_cli/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <map>

#include "apnkit/defect.hpp"
#include "apnkit/diffcore.hpp"
#include "apnkit/error.hpp"
#include "apnkit/flats.hpp"
#include "apnkit/function_spec.hpp"
#include "apnkit/functions.hpp"
#include "apnkit/spectra.hpp"
#include "apnkit_cli/render.hpp"

namespace apnkit::cli {
namespace {

struct Context {
  FieldPtr field;
  FuncTable g;
  Labeler label;

  explicit Context(const RunConfig& cfg)
      : field(make_field(cfg.n, cfg.modulus)), g(parse_function(field, cfg.func)), label(field, cfg.hex) {}
};

void guard_full(const RunConfig& cfg, std::string_view what, bool streamable) {
  if (cfg.n <= kFullLimit || cfg.force) return;
  if (streamable && cfg.stream) return;
  std::string msg = std::string(what) + " at n=" + std::to_string(cfg.n) + " enumerates 2^" +
                    std::to_string(2 * cfg.n) + " entries (limit n=" + std::to_string(kFullLimit) + "); ";
  msg += streamable ? "use --stream for per-row statistics, or --force" : "use --force";
  throw Error(ErrorCode::kTooLarge, msg);
}

void guard_jwr(const RunConfig& cfg) {
  if (cfg.n > kJwrLimit && !cfg.jwr_override) {
    throw Error(ErrorCode::kTooLarge, "triple enumeration is capped at n=" + std::to_string(kJwrLimit) +
                                          "; pass --jwr-override to run it anyway");
  }
}

json header(const RunConfig& cfg, const Context& ctx) {
  json j;
  j["n"] = cfg.n;
  j["modulus"] = hex_string(ctx.field->modulus());
  j["function"] = cfg.func;
  return j;
}

void text_header(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  out << "# n=" << cfg.n << " modulus=" << hex_string(ctx.field->modulus()) << " function=" << cfg.func << "\n";
}

std::vector<std::string> column_labels(const Context& ctx) { return ctx.label.all(ctx.field->ordering()); }

std::size_t width_of(const std::vector<std::string>& labels) {
  std::size_t w = 1;
  for (const auto& s : labels) w = std::max(w, s.size());
  return w + 1;
}

// Aggregate {delta(a,b)} frequencies and delta over streamed row profiles.
std::map<std::uint32_t, std::uint64_t> spectrum_from_profiles(std::span<const RowProfile> profiles, std::uint32_t q) {
  std::map<std::uint32_t, std::uint64_t> freq;
  for (const auto& p : profiles) {
    std::uint32_t hit = 0;
    for (const auto& [m, c] : p.histogram) {
      freq[m] += c;
      hit += c;
    }
    if (hit < q) freq[0] += q - hit;
  }
  return freq;
}

json spectrum_json(const std::map<std::uint32_t, std::uint64_t>& freq) {
  json j = json::object();
  for (const auto& [m, c] : freq) j[std::to_string(m)] = c;
  return j;
}

std::string spectrum_text(const std::map<std::uint32_t, std::uint64_t>& freq) {
  std::string s;
  for (const auto& [m, c] : freq) {
    if (!s.empty()) s += " ";
    s += std::to_string(m) + ":" + std::to_string(c);
  }
  return s;
}

std::string ks_text(const std::vector<std::uint32_t>& ks) {
  std::string s;
  for (auto k : ks) {
    if (!s.empty()) s += " ";
    s += std::to_string(k);
  }
  return s;
}

json flat_json(const Labeler& label, const Flat& fl) { return label.array(fl); }

}  // namespace

void cmd_diffsquare(const RunConfig& cfg, std::ostream& out) {
  guard_full(cfg, "diffsquare", true);
  const Context ctx(cfg);
  const Field& f = *ctx.field;
  const auto cols = column_labels(ctx);
  const std::size_t w = width_of(cols);

  // One row at a time; memory stays O(q) at any n.
  auto row_at = [&](std::uint32_t i, std::vector<std::string>& values, std::vector<bool>& marked) {
    const Element a = f.exp(i);
    const auto row = derivative_row(ctx.g, a);
    std::vector<std::uint32_t> count(f.size(), 0);
    for (Element v : row) ++count[v];
    values.clear();
    marked.clear();
    for (Element x : f.ordering()) {
      values.push_back(ctx.label(row[x]));
      marked.push_back(count[row[x]] > 2);
    }
  };

  std::vector<std::string> values;
  std::vector<bool> marked;
  const std::uint32_t rows = f.size() - 1;
  switch (cfg.format) {
    case Format::kCsv: {
      out << "a," << join(cols, ",") << "\n";
      for (std::uint32_t i = 0; i < rows; ++i) {
        row_at(i, values, marked);
        out << ctx.label(f.exp(i)) << "," << join(values, ",") << "\n";
      }
      return;
    }
    case Format::kJson: {
      json head = header(cfg, ctx);
      head["columns"] = cols;
      if (cfg.stream) {
        // JSON lines: header object, then one object per row.
        out << head.dump() << "\n";
      }
      json doc_rows = json::array();
      for (std::uint32_t i = 0; i < rows; ++i) {
        row_at(i, values, marked);
        json r;
        r["a"] = ctx.label(f.exp(i));
        r["values"] = values;
        r["marked"] = marked;
        if (cfg.stream) {
          out << r.dump() << "\n";
        } else {
          doc_rows.push_back(std::move(r));
        }
      }
      if (!cfg.stream) {
        head["rows"] = std::move(doc_rows);
        out << head.dump(2) << "\n";
      }
      return;
    }
    case Format::kText: {
      text_header(cfg, ctx, out);
      std::vector<std::string> mask_lines;
      out << std::left << std::setw(static_cast<int>(w)) << "a\\x";
      for (const auto& c : cols) out << std::setw(static_cast<int>(w)) << c;
      out << "\n";
      for (std::uint32_t i = 0; i < rows; ++i) {
        row_at(i, values, marked);
        out << std::setw(static_cast<int>(w)) << ctx.label(f.exp(i));
        for (const auto& v : values) out << std::setw(static_cast<int>(w)) << v;
        out << "\n";
        std::string m;
        for (bool b : marked) m += b ? 'o' : '.';
        mask_lines.push_back(ctx.label(f.exp(i)) + " " + m);
      }
      out << "\n# marked entries (o: value repeated more than twice in its row)\n";
      for (const auto& line : mask_lines) out << line << "\n";
      out << std::right;
      return;
    }
  }
}

void cmd_ddt(const RunConfig& cfg, std::ostream& out) {
  guard_full(cfg, "ddt", true);
  const Context ctx(cfg);
  const Field& f = *ctx.field;
  const std::uint32_t q = f.size();

  if (cfg.stream) {
    const auto profiles = row_profiles(ctx.g, cfg.jobs);
    const auto freq = spectrum_from_profiles(profiles, q);
    std::uint32_t delta = 0;
    for (const auto& p : profiles) delta = std::max(delta, p.max_multiplicity());
    switch (cfg.format) {
      case Format::kCsv:
        out << "a,multiplicity,count\n";
        for (std::uint32_t i = 0; i + 1 < q; ++i) {
          const auto& p = profiles[f.exp(i) - 1];
          for (const auto& [m, c] : p.histogram) out << ctx.label(p.a) << "," << m << "," << c << "\n";
        }
        return;
      case Format::kJson: {
        json head = header(cfg, ctx);
        head["delta"] = delta;
        head["spectrum"] = spectrum_json(freq);
        out << head.dump() << "\n";
        for (std::uint32_t i = 0; i + 1 < q; ++i) {
          const auto& p = profiles[f.exp(i) - 1];
          json r;
          r["a"] = ctx.label(p.a);
          json h = json::object();
          for (const auto& [m, c] : p.histogram) h[std::to_string(m)] = c;
          r["histogram"] = std::move(h);
          out << r.dump() << "\n";
        }
        return;
      }
      case Format::kText:
        text_header(cfg, ctx, out);
        out << "delta: " << delta << "\nspectrum: " << spectrum_text(freq) << "\n";
        for (std::uint32_t i = 0; i + 1 < q; ++i) {
          const auto& p = profiles[f.exp(i) - 1];
          out << ctx.label(p.a) << ":";
          for (const auto& [m, c] : p.histogram) out << " " << m << "x" << c;
          out << "\n";
        }
        return;
    }
  }

  const auto t = ddt(ctx.g, cfg.jobs);
  const auto spec = diff_spectrum(t);
  const auto cols = column_labels(ctx);
  auto counts_of = [&](Element a) {
    std::vector<std::uint32_t> c;
    c.reserve(q);
    for (Element b : f.ordering()) c.push_back(t.at(a, b));
    return c;
  };
  switch (cfg.format) {
    case Format::kCsv:
      out << "a," << join(cols, ",") << "\n";
      for (std::uint32_t i = 0; i + 1 < q; ++i) {
        const Element a = f.exp(i);
        out << ctx.label(a);
        for (auto c : counts_of(a)) out << "," << c;
        out << "\n";
      }
      return;
    case Format::kJson: {
      json doc = header(cfg, ctx);
      doc["delta"] = delta_uniformity(t);
      doc["spectrum"] = spectrum_json(spec.frequency);
      doc["columns"] = cols;
      json rows = json::array();
      for (std::uint32_t i = 0; i + 1 < q; ++i) {
        const Element a = f.exp(i);
        json r;
        r["a"] = ctx.label(a);
        r["counts"] = counts_of(a);
        rows.push_back(std::move(r));
      }
      doc["rows"] = std::move(rows);
      out << doc.dump(2) << "\n";
      return;
    }
    case Format::kText: {
      text_header(cfg, ctx, out);
      out << "delta: " << delta_uniformity(t) << "\nspectrum: " << spectrum_text(spec.frequency) << "\n";
      const std::size_t w = width_of(cols);
      out << std::left << std::setw(static_cast<int>(w)) << "a\\b";
      for (const auto& c : cols) out << std::setw(static_cast<int>(w)) << c;
      out << "\n";
      for (std::uint32_t i = 0; i + 1 < q; ++i) {
        const Element a = f.exp(i);
        out << std::setw(static_cast<int>(w)) << ctx.label(a);
        for (auto c : counts_of(a)) out << std::setw(static_cast<int>(w)) << c;
        out << "\n";
      }
      out << std::right;
      return;
    }
  }
}

void cmd_spectra(const RunConfig& cfg, std::ostream& out) {
  if (cfg.jwr) guard_jwr(cfg);
  const Context ctx(cfg);
  const auto r = spectra_report(ctx.g, cfg.jobs);
  std::optional<std::size_t> triples;
  if (cfg.jwr) triples = jwr_violating_triples(ctx.g).size();
  switch (cfg.format) {
    case Format::kCsv:
      out << "set,element\n";
      for (Element a : r.row_spec) out << "row," << ctx.label(a) << "\n";
      for (Element x : r.col_spec) out << "col," << ctx.label(x) << "\n";
      return;
    case Format::kJson: {
      json doc = header(cfg, ctx);
      doc["row_spec"] = ctx.label.array(r.row_spec);
      doc["col_spec"] = ctx.label.array(r.col_spec);
      doc["is_apn"] = r.is_apn;
      if (triples) doc["jwr_violations"] = *triples;
      out << doc.dump(2) << "\n";
      return;
    }
    case Format::kText:
      text_header(cfg, ctx, out);
      out << "row_spec (" << r.row_spec.size() << "): " << join(ctx.label.all(r.row_spec), " ") << "\n";
      out << "col_spec (" << r.col_spec.size() << "): " << join(ctx.label.all(r.col_spec), " ") << "\n";
      out << "is_apn: " << (r.is_apn ? "true" : "false") << "\n";
      if (triples) out << "jwr_violations: " << *triples << "\n";
      return;
  }
}

void cmd_defect(const RunConfig& cfg, std::ostream& out) {
  const Context ctx(cfg);
  const Field& f = *ctx.field;
  const auto r = d_value(ctx.g, cfg.jobs);
  auto row_of = [&](std::uint32_t i) -> const RowPartition& { return r.per_row[f.exp(i) - 1]; };
  const std::uint32_t rows = f.size() - 1;
  switch (cfg.format) {
    case Format::kCsv:
      out << "a,s_size,ks,chi\n";
      for (std::uint32_t i = 0; i < rows; ++i) {
        const auto& p = row_of(i);
        out << ctx.label(p.a) << "," << p.s_size << "," << ks_text(p.ks) << "," << p.chi << "\n";
      }
      return;
    case Format::kJson: {
      json doc;
      doc["n"] = cfg.n;
      doc["function"] = cfg.func;
      doc["d_value"] = r.d_value;
      doc["apn_defect"] = r.apn_defect;
      doc["ratio"] = {{"num", r.ratio_num}, {"den", r.ratio_den}};
      doc["quasi_apn"] = r.quasi_apn;
      doc["boundary"] = r.boundary;
      json rs = json::array();
      for (std::uint32_t i = 0; i < rows; ++i) {
        const auto& p = row_of(i);
        json row;
        row["a"] = ctx.label(p.a);
        row["s_size"] = p.s_size;
        row["ks"] = p.ks;
        row["chi"] = p.chi;
        rs.push_back(std::move(row));
      }
      doc["rows"] = std::move(rs);
      out << doc.dump(2) << "\n";
      return;
    }
    case Format::kText:
      text_header(cfg, ctx, out);
      out << "d_value: " << r.d_value << "\napn_defect: " << r.apn_defect << "\nratio: " << r.ratio_num << "/"
          << r.ratio_den << "\nquasi_apn: " << (r.quasi_apn ? "true" : "false") << (r.boundary ? " (boundary)" : "")
          << "\n";
      out << "# a  s_size  ks  chi\n";
      for (std::uint32_t i = 0; i < rows; ++i) {
        const auto& p = row_of(i);
        out << ctx.label(p.a) << "  " << p.s_size << "  [" << ks_text(p.ks) << "]  " << p.chi << "\n";
      }
      return;
  }
}

void cmd_flats(const RunConfig& cfg, std::ostream& out) {
  if (cfg.method != "square" && cfg.method != "jwr") {
    throw Error(ErrorCode::kInvalidSpec, "unknown flats method '" + cfg.method + "' (square|jwr)");
  }
  if (cfg.method == "jwr") guard_jwr(cfg);
  guard_full(cfg, "flats", true);
  const Context ctx(cfg);

  if (cfg.stream && cfg.method == "square") {
    const std::uint64_t count = vf_count_from_profiles(row_profiles(ctx.g, cfg.jobs));
    switch (cfg.format) {
      case Format::kCsv: out << "count,raw_count\n" << count << "," << 3 * count << "\n"; return;
      case Format::kJson: {
        json doc = header(cfg, ctx);
        doc["count"] = count;
        doc["raw_count"] = 3 * count;
        out << doc.dump(2) << "\n";
        return;
      }
      case Format::kText:
        text_header(cfg, ctx, out);
        out << "count: " << count << "\nraw_count: " << 3 * count << "\n";
        return;
    }
  }

  const FlatSet s =
      cfg.method == "jwr" ? flats_from_triples(jwr_violating_triples(ctx.g)) : vanishing_flats(ctx.g, cfg.jobs);
  switch (cfg.format) {
    case Format::kCsv:
      out << "x,y,z,w\n";
      for (const auto& fl : s.flats) {
        const auto labels = ctx.label.all(fl);
        out << join(labels, ",") << "\n";
      }
      return;
    case Format::kJson: {
      json doc = header(cfg, ctx);
      doc["count"] = s.size();
      doc["raw_count"] = s.raw_count;
      json arr = json::array();
      for (const auto& fl : s.flats) arr.push_back(flat_json(ctx.label, fl));
      doc["flats"] = std::move(arr);
      out << doc.dump(2) << "\n";
      return;
    }
    case Format::kText:
      text_header(cfg, ctx, out);
      out << "count: " << s.size() << "\nraw_count: " << s.raw_count << "\n";
      for (const auto& fl : s.flats) out << "{" << join(ctx.label.all(fl), ", ") << "}\n";
      return;
  }
}

void cmd_report(const RunConfig& cfg, std::ostream& out) {
  const Context ctx(cfg);
  const std::uint32_t q = ctx.field->size();
  // Everything below is read off streamed row profiles; no q x q table is stored.
  const auto profiles = row_profiles(ctx.g, cfg.jobs);
  std::uint32_t delta = 0;
  for (const auto& p : profiles) delta = std::max(delta, p.max_multiplicity());
  const auto freq = spectrum_from_profiles(profiles, q);
  const auto def = defect_from_profiles(profiles, q);
  const std::uint64_t vf = vf_count_from_profiles(profiles);
  const auto spectra = spectra_report(ctx.g, cfg.jobs);
  const bool perm = ctx.g.is_permutation();

  switch (cfg.format) {
    case Format::kCsv:
      out << "key,value\n";
      out << "n," << cfg.n << "\nmodulus," << hex_string(ctx.field->modulus()) << "\nfunction," << cfg.func << "\n";
      out << "is_permutation," << (perm ? "true" : "false") << "\ndelta," << delta << "\n";
      out << "d_value," << def.d_value << "\ndefect," << def.apn_defect << "\nratio," << def.ratio_num << "/"
          << def.ratio_den << "\n";
      out << "quasi_apn," << (def.quasi_apn ? "true" : "false") << "\nboundary," << (def.boundary ? "true" : "false")
          << "\n";
      out << "vf," << vf << "\nrow_spec_size," << spectra.row_spec.size() << "\ncol_spec_size,"
          << spectra.col_spec.size() << "\nis_apn," << (spectra.is_apn ? "true" : "false") << "\n";
      return;
    case Format::kJson: {
      json doc = header(cfg, ctx);
      doc["is_permutation"] = perm;
      doc["delta"] = delta;
      doc["spectrum"] = spectrum_json(freq);
      doc["d_value"] = def.d_value;
      doc["defect"] = def.apn_defect;
      doc["ratio"] = {{"num", def.ratio_num}, {"den", def.ratio_den}};
      doc["quasi_apn"] = def.quasi_apn;
      doc["boundary"] = def.boundary;
      doc["vf"] = vf;
      doc["row_spec"] = ctx.label.array(spectra.row_spec);
      doc["col_spec"] = ctx.label.array(spectra.col_spec);
      doc["is_apn"] = spectra.is_apn;
      out << doc.dump(2) << "\n";
      return;
    }
    case Format::kText:
      text_header(cfg, ctx, out);
      out << "is_permutation: " << (perm ? "true" : "false") << "\n";
      out << "delta: " << delta << "\nspectrum: " << spectrum_text(freq) << "\n";
      out << "d_value: " << def.d_value << "\ndefect: " << def.apn_defect << "\nratio: " << def.ratio_num << "/"
          << def.ratio_den << "\nquasi_apn: " << (def.quasi_apn ? "true" : "false")
          << (def.boundary ? " (boundary)" : "") << "\n";
      out << "vf: " << vf << "\n";
      out << "row_spec (" << spectra.row_spec.size() << "): " << join(ctx.label.all(spectra.row_spec), " ") << "\n";
      out << "col_spec (" << spectra.col_spec.size() << "): " << join(ctx.label.all(spectra.col_spec), " ") << "\n";
      out << "is_apn: " << (spectra.is_apn ? "true" : "false") << "\n";
      return;
  }
}

}  // namespace apnkit::cli
