#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourcycle/graph.hpp"

namespace fourcycle {

class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Stored-edge accounting in word-RAM units.
class SpaceMeter {
 public:
  void record_store(std::int64_t delta);
  void add_aux(std::uint64_t units) { aux_units_ += units; }
  std::uint64_t stored() const { return stored_; }
  std::uint64_t peak() const { return peak_; }
  std::uint64_t aux_units() const { return aux_units_; }

 private:
  std::uint64_t stored_ = 0;
  std::uint64_t peak_ = 0;
  std::uint64_t aux_units_ = 0;
};

enum class CapStatus { within, aborted };

CapStatus enforce_space_cap(const SpaceMeter& meter, std::uint64_t cap);

class EdgeStream {
 public:
  EdgeStream() = default;
  explicit EdgeStream(std::vector<Edge> edges, std::uint64_t order_seed = 0, bool reshuffle = false);
  static EdgeStream from_graph(const Graph& g, std::uint64_t order_seed = 0, bool reshuffle = false);
  // Each pass re-reads the file; a pass that yields a different edge count raises StreamError.
  static EdgeStream from_file(const std::string& path, bool replay_from_disk, std::uint64_t order_seed = 0,
                              bool reshuffle = false);

  // pass_index >= 1. With reshuffle the order is a function of (order_seed, pass_index).
  std::vector<Edge> open_pass(int pass_index) const;

  std::size_t size() const { return edges_.size(); }
  std::size_t duplicates() const { return duplicates_; }
  const std::vector<Edge>& base_order() const { return edges_; }
  std::uint64_t order_seed() const { return order_seed_; }
  bool reshuffle() const { return reshuffle_; }
  EdgeStream with_order(std::uint64_t order_seed, bool reshuffle) const;
  Graph to_graph() const { return Graph(edges_); }
  // One past the largest node id.
  std::size_t node_bound() const { return node_bound_; }

 private:
  std::vector<Edge> edges_;
  std::uint64_t order_seed_ = 0;
  bool reshuffle_ = false;
  std::size_t duplicates_ = 0;
  std::size_t node_bound_ = 0;
  std::optional<std::string> replay_path_;
};

}  // namespace fourcycle
