#pragma once

// Subcommands of the `sdn` tool, written against std::ostream so they can be
// driven from tests. Exit codes: 0 success, 1 validation failure or
// mismatch, 2 usage or parse error.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdn/enumerator_params.hpp"
#include "sdn/error.hpp"
#include "sdn/gf2/bit_matrix.hpp"
#include "sdn/io/code_file.hpp"
#include "sdn/io/dataset.hpp"
#include "sdn/neighbor.hpp"
#include "sdn/search.hpp"
#include "sdn/self_dual.hpp"
#include "sdn/weight_enumerator.hpp"

#ifndef SDN_DEFAULT_DATA_DIR
#define SDN_DEFAULT_DATA_DIR "data"
#endif

namespace sdn::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// --data-dir if given, else $SDN_DATA_DIR, else the build-time default.
inline std::string resolve_data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SDN_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return SDN_DEFAULT_DATA_DIR;
}

namespace detail {

// Runs `body`, mapping library errors onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

inline bool self_orthogonal(const BitMatrix& g, std::string& why) {
  for (std::size_t i = 0; i < g.num_rows(); ++i)
    for (std::size_t j = i; j < g.num_rows(); ++j)
      if (inner_product(g.row(i), g.row(j))) {
        why = "rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " have inner product 1";
        return false;
      }
  return true;
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

inline std::string params_line(const EnumeratorParams& p) {
  std::string s(to_string(p.form));
  if (p.form == EnumeratorForm::W68_2) s += " gamma=" + std::to_string(p.gamma);
  if (p.form == EnumeratorForm::W68_2 || p.form == EnumeratorForm::W68_1 || p.form == EnumeratorForm::Unrecognized)
    s += " beta=" + std::to_string(p.beta);
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------- verify

inline int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const BitMatrix g = io::read_code_file(path);
    const std::size_t n = g.num_cols();
    const RowEchelon e = rref(g);
    const std::size_t k = e.pivots.size();
    std::string why;
    const bool orth = detail::self_orthogonal(g, why);
    const bool ones = row_space_contains(e, BitVector::ones(n));

    out << "length " << n << '\n';
    out << "dimension " << k << '\n';
    out << "self-orthogonal " << (orth ? "yes" : "no") << '\n';
    out << "all-ones codeword " << (ones ? "yes" : "no") << '\n';
    if (n % 2 != 0) why = "odd length";
    else if (orth && k != n / 2) why = "dimension " + std::to_string(k) + " is not n/2";
    if (why.empty()) {
      out << "self-dual [" << n << ',' << k << "]\n";
      return static_cast<int>(kOk);
    }
    out << "not self-dual: " << why << '\n';
    return static_cast<int>(kFailure);
  });
}

// ----------------------------------------------------------------- wenum

struct WenumArgs {
  std::string path;
  unsigned threads = 0;
  std::size_t early_exit = 0;
  bool json = false;
  bool halve = false;
};

inline int cmd_wenum(const WenumArgs& a, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const BitMatrix g = rref(io::read_code_file(a.path)).matrix;
    const std::size_t n = g.num_cols();
    if (g.empty()) throw DomainError("the zero code has no weight distribution to report");

    ParallelOptions opts;
    opts.threads = a.threads;
    opts.abort_below = a.early_exit;
    opts.halve_with_all_ones = a.halve;
    const EnumerationResult r = parallel_weight_distribution(g, opts);

    nlohmann::json j;
    j["length"] = n;
    j["dim"] = g.num_rows();
    if (r.aborted) {
      if (a.json) {
        j["aborted"] = true;
        j["early_exit"] = a.early_exit;
        out << j.dump() << '\n';
      } else {
        out << "length " << n << "\ndimension " << g.num_rows() << '\n';
        out << "early exit: found a codeword of weight below " << a.early_exit << '\n';
      }
      return static_cast<int>(kOk);
    }

    const WeightDistribution& d = r.distribution;
    const std::size_t dmin = d.min_distance();
    std::optional<EnumeratorParams> params;
    if (n == 68) params = classify_enumerator(d);

    if (a.json) {
      nlohmann::json counts = nlohmann::json::object();
      for (std::size_t w = 0; w <= n; ++w)
        if (d[w] != 0) counts[std::to_string(w)] = d[w];
      j["A"] = counts;
      j["d_min"] = dmin;
      j["form"] = params ? nlohmann::json(std::string(to_string(params->form))) : nlohmann::json(nullptr);
      const bool has_beta = params && params->form != EnumeratorForm::NonExtremal;
      j["beta"] = has_beta ? nlohmann::json(params->beta) : nlohmann::json(nullptr);
      j["gamma"] = params && params->form == EnumeratorForm::W68_2 ? nlohmann::json(params->gamma)
                                                                     : nlohmann::json(nullptr);
      out << j.dump() << '\n';
    } else {
      out << "length " << n << "\ndimension " << g.num_rows() << '\n';
      for (std::size_t w = 0; w <= n; ++w)
        if (d[w] != 0) out << "A_" << w << " = " << d[w] << '\n';
      out << "d_min=" << dmin << '\n';
      if (params) out << detail::params_line(*params) << '\n';
    }
    return static_cast<int>(kOk);
  });
}

// -------------------------------------------------------------- neighbor

struct NeighborArgs {
  std::string path;
  std::vector<std::string> xs;
  std::string x_file;
  std::string out_path;
  bool standard_form = false;  // apply each x to the standard form of the current code
};

inline int cmd_neighbor(const NeighborArgs& a, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    SelfDualCode code = make_self_dual(io::read_code_file(a.path));
    std::vector<std::string> xs = a.xs;
    if (!a.x_file.empty())
      for (auto& x : io::parse_vector_lines(io::read_text_file(a.x_file))) xs.push_back(std::move(x));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      try {
        const BitVector x = io::parse_neighbor_vector(xs[i], code.length());
        if (a.standard_form) code = sdn::standard_form(code).code;
        code = neighbor(code, x);
      } catch (const ParseError& e) {
        throw ParseError("step " + std::to_string(i) + ": " + e.what());
      } catch (const Error& e) {
        err << "error: step " << i << ": " << e.what() << '\n';
        return static_cast<int>(kFailure);
      }
    }
    detail::write_output(a.out_path, io::serialize_code(code.generator()), out);
    return static_cast<int>(kOk);
  });
}

// -------------------------------------------------------------- distance

inline int cmd_distance(const std::string& path1, const std::string& path2, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const SelfDualCode a = make_self_dual(io::read_code_file(path1));
    const SelfDualCode b = make_self_dual(io::read_code_file(path2));
    const std::size_t d = neighbor_distance(a, b);
    out << "d_N=" << d << '\n';
    out << "dim_intersection=" << a.length() / 2 - d << '\n';
    return static_cast<int>(kOk);
  });
}

// ---------------------------------------------------------------- export

/// Writes a bundled code. By default the code is given in the coordinates its
/// published neighbor vectors refer to; `base_coordinates` uses N_0's instead.
inline int cmd_export(const std::string& data_dir, const std::string& label, const std::string& out_path,
                      bool base_coordinates, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const io::Dataset ds = io::Dataset::load(resolve_data_dir(data_dir));
    const NeighborChain chain = ds.reference_chain();
    std::optional<SelfDualCode> code;
    if (label.rfind("N_", 0) == 0) {
      const std::size_t i = io::Dataset::chain_index(label);
      if (i > chain.size()) throw ParseError("unknown label '" + label + "'");
      code = base_coordinates ? chain.code(i) : ds.published_chain_code(i);
    } else {
      const io::TableEntry* e = ds.find(label);
      if (e == nullptr) throw ParseError("unknown label '" + label + "'");
      code = base_coordinates ? ds.build(chain, *e) : ds.published_code(*e);
    }
    detail::write_output(out_path, io::serialize_code(code->generator()), out);
    return static_cast<int>(kOk);
  });
}

// ------------------------------------------------------------- reproduce

struct ReproduceArgs {
  std::string data_dir;
  std::string table;  // "1".."6" or "all"; empty when labels are used
  std::vector<std::string> labels;
  unsigned threads = 0;
};

inline int cmd_reproduce(const ReproduceArgs& a, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const io::Dataset ds = io::Dataset::load(resolve_data_dir(a.data_dir));
    std::vector<const io::TableEntry*> selected;
    for (const auto& label : a.labels) {
      const io::TableEntry* e = ds.find(label);
      if (e == nullptr) throw ParseError("unknown label '" + label + "'");
      selected.push_back(e);
    }
    if (!a.table.empty()) {
      if (a.table == "all") {
        for (const auto& e : ds.entries()) selected.push_back(&e);
      } else if (a.table.size() == 1 && a.table[0] >= '1' && a.table[0] <= '6') {
        for (const auto* e : ds.table(a.table[0] - '0')) selected.push_back(e);
      } else {
        throw ParseError("--table must be 1..6 or all");
      }
    }
    if (selected.empty()) throw ParseError("nothing selected: pass --table or --labels");

    const NeighborChain chain = ds.reference_chain();
    std::size_t passed = 0;
    ParallelOptions opts;
    opts.threads = a.threads;
    for (const io::TableEntry* e : selected) {
      const SelfDualCode code = ds.build(chain, *e);
      const WeightDistribution d = parallel_weight_distribution(code.generator(), opts).distribution;
      const std::size_t dmin = d.min_distance();
      const EnumeratorParams p = classify_enumerator(d);
      const bool ok = dmin == 12 && p.form == EnumeratorForm::W68_2 && p.gamma == e->gamma && p.beta == e->beta;
      if (ok) {
        ++passed;
        out << "PASS " << e->label << " gamma=" << p.gamma << " beta=" << p.beta << " d_min=" << dmin << '\n';
      } else {
        out << "FAIL " << e->label << " expected W68_2 gamma=" << e->gamma << " beta=" << e->beta << " d_min=12, got "
            << detail::params_line(p) << " d_min=" << dmin << '\n';
      }
      out.flush();
    }
    out << "summary: " << passed << '/' << selected.size() << " reproduced\n";
    return static_cast<int>(passed == selected.size() ? kOk : kFailure);
  });
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::string path;
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  std::size_t candidates = 0;
  std::optional<std::int64_t> gamma;
  std::vector<std::int64_t> betas;
  unsigned threads = 0;
};

inline nlohmann::json hit_to_json(const SearchHit& h) {
  nlohmann::json j;
  nlohmann::json chain = nlohmann::json::array();
  for (const auto& x : h.chain) chain.push_back(x.to_string());
  j["chain"] = chain;
  j["d_min"] = h.d_min;
  j["fingerprint"] = h.fingerprint;
  if (h.params) {
    j["form"] = std::string(to_string(h.params->form));
    j["beta"] = h.params->beta;
    j["gamma"] = h.params->form == EnumeratorForm::W68_2 ? nlohmann::json(h.params->gamma) : nlohmann::json(nullptr);
  }
  return j;
}

inline int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const SelfDualCode origin = make_self_dual(io::read_code_file(a.path));
    SearchConfig cfg;
    cfg.seed = a.seed;
    cfg.chain_depth = a.depth;
    cfg.max_candidates = a.candidates;
    cfg.threads = a.threads;
    if (a.gamma) {
      if (a.betas.empty()) {
        cfg.target.gammas.insert(*a.gamma);
      } else {
        for (auto b : a.betas) cfg.target.gamma_beta.insert({*a.gamma, b});
      }
    } else if (!a.betas.empty()) {
      throw ParseError("--beta requires --gamma");
    }
    const auto hits = run_search(origin, cfg, [&](const std::string& msg) { err << "skipped: " << msg << '\n'; });
    for (const auto& h : hits) out << hit_to_json(h).dump() << '\n';
    return static_cast<int>(kOk);
  });
}

}  // namespace sdn::cli
