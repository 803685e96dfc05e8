#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sdn/error.hpp"
#include "sdn/gf2/bit_matrix.hpp"
#include "sdn/io/code_file.hpp"
#include "sdn/neighbor.hpp"
#include "sdn/self_dual.hpp"

namespace sdn::io {

/// One published code: the neighbor of `parent` (a chain code "N_i") by the
/// vector `x`, given on coordinates n/2+1..n of the parent's standard form.
struct TableEntry {
  int table = 0;
  std::string label;
  std::string parent;
  std::string x;
  int gamma = 0;
  int beta = 0;
};

/// The bundled reference data: the 34x34 block A of the base generator
/// (I_34 | A), and the chain and neighbor tables.
///
/// Table 1 holds the chain N_1..N_4 (entry label N_{i+1}, parent N_i); tables
/// 2 to 6 hold neighbors of N_0 to N_4.
class Dataset {
 public:
  static constexpr const char* kMatrixFile = "base_a.txt";
  static constexpr const char* kTablesFile = "tables.txt";

  static Dataset load(const std::string& dir) {
    return Dataset(read_code_file(dir + "/" + kMatrixFile), parse_tables(read_text_file(dir + "/" + kTablesFile)));
  }

  Dataset(BitMatrix a, std::vector<TableEntry> entries) : a_(std::move(a)), entries_(std::move(entries)) {
    if (a_.num_rows() != a_.num_cols()) throw ParseError("matrix A must be square");
    for (const auto& e : entries_) {
      if (e.x.size() != a_.num_cols())
        throw ParseError("entry " + e.label + ": vector has " + std::to_string(e.x.size()) + " bits");
      if (BitVector::from_string(e.x).weight() % 2 != 0) throw ParseError("entry " + e.label + ": odd-weight vector");
      if (e.gamma < 0 || e.gamma > 9) throw ParseError("entry " + e.label + ": gamma out of range");
    }
  }

  const BitMatrix& matrix_a() const noexcept { return a_; }
  const std::vector<TableEntry>& entries() const noexcept { return entries_; }

  std::size_t length() const noexcept { return 2 * a_.num_cols(); }

  /// (I | A) as a full generator matrix.
  BitMatrix base_generator() const {
    const std::size_t k = a_.num_cols();
    BitMatrix g(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      BitVector row = a_.row(i).embedded(2 * k, k);
      row.set(i);
      g.append_row(std::move(row));
    }
    return g;
  }

  SelfDualCode base_code() const { return make_self_dual(base_generator()); }

  const TableEntry* find(std::string_view label) const noexcept {
    for (const auto& e : entries_)
      if (e.label == label) return &e;
    return nullptr;
  }

  std::vector<const TableEntry*> table(int t) const {
    std::vector<const TableEntry*> out;
    for (const auto& e : entries_)
      if (e.table == t) out.push_back(&e);
    return out;
  }

  /// Table 1 entries in chain order.
  std::vector<const TableEntry*> chain_entries() const {
    std::vector<const TableEntry*> out = table(1);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i]->parent != "N_" + std::to_string(i))
        throw ParseError("table 1 entries are not in chain order at " + out[i]->label);
    return out;
  }

  /// The vector of an entry as printed: n/2 bits placed on coordinates n/2+1..n.
  BitVector vector_of(const TableEntry& e) const { return parse_neighbor_vector(e.x, length()); }

  /// The published vectors refer to the standard form (I | A') of their parent
  /// code, not to the parent's coordinates inherited from N_0. frame(i)[j] is
  /// the N_0 coordinate sitting at position j of that standard form of N_i.
  const std::vector<std::size_t>& frame(std::size_t i) const {
    ensure_chain();
    return frames_.at(i);
  }

  /// The vector of an entry moved into N_0 coordinates.
  BitVector lifted_vector(const TableEntry& e) const { return unpermute(vector_of(e), frame(chain_index(e.parent))); }

  /// N_0 followed by the table 1 steps, all in N_0 coordinates.
  NeighborChain reference_chain() const {
    ensure_chain();
    return *chain_;
  }

  /// Index i of a chain label "N_i".
  static std::size_t chain_index(std::string_view label) {
    if (label.size() < 3 || label.substr(0, 2) != "N_") throw ParseError("not a chain label: " + std::string(label));
    return static_cast<std::size_t>(std::stoul(std::string(label.substr(2))));
  }

  /// Rebuilds the code of an entry, in N_0 coordinates, from reference_chain().
  SelfDualCode build(const NeighborChain& chain, const TableEntry& e) const {
    if (e.table == 1) return chain.code(chain_index(e.label));
    return neighbor(chain.code(chain_index(e.parent)), lifted_vector(e));
  }

  /// N_i in the coordinates its published neighbor vectors refer to.
  SelfDualCode published_chain_code(std::size_t i) const {
    return make_self_dual(permute_columns(reference_chain().code(i).generator(), frame(i)));
  }

  /// An entry's code in its parent's published coordinates, i.e. exactly the
  /// neighbor of published_chain_code(parent) by vector_of(e).
  SelfDualCode published_code(const TableEntry& e) const {
    const auto& order = frame(chain_index(e.parent));
    return make_self_dual(permute_columns(build(reference_chain(), e).generator(), order));
  }

 private:
  static std::vector<TableEntry> parse_tables(const std::string& text) {
    std::vector<TableEntry> out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line.front() == '#') continue;
      std::istringstream fields(line);
      TableEntry e;
      if (!(fields >> e.table >> e.label >> e.parent >> e.x >> e.gamma >> e.beta))
        throw ParseError("expected: table label parent x gamma beta", line_no);
      out.push_back(std::move(e));
    }
    return out;
  }

  void ensure_chain() const {
    if (chain_) return;
    NeighborChain chain(base_code());
    std::vector<std::vector<std::size_t>> frames;
    std::vector<std::size_t> to_base(length());
    std::iota(to_base.begin(), to_base.end(), std::size_t{0});
    const auto steps = chain_entries();
    for (std::size_t i = 0; i <= steps.size(); ++i) {
      // Standardize N_i as it appears in the previous frame, then compose.
      const auto local = make_self_dual(permute_columns(chain.code(i).generator(), to_base));
      const auto sf = standard_form(local);
      std::vector<std::size_t> composed(length());
      for (std::size_t j = 0; j < length(); ++j) composed[j] = to_base[sf.order[j]];
      frames.push_back(composed);
      to_base = std::move(composed);
      if (i < steps.size()) chain = chain.extend(unpermute(vector_of(*steps[i]), frames.back()));
    }
    chain_ = std::move(chain);
    frames_ = std::move(frames);
  }

  BitMatrix a_;
  std::vector<TableEntry> entries_;
  mutable std::optional<NeighborChain> chain_;
  mutable std::vector<std::vector<std::size_t>> frames_;
};

}  // namespace sdn::io
