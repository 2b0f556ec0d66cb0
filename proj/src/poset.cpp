#include "aft/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <random>
#include <sstream>
#include <stdexcept>

#include "aft/enumerate.hpp"

namespace aft {

namespace {

void require_asymmetric(const Tree& t) {
  if (t.size() < 2 || !is_asymmetric(t)) {
    throw TreeError(ErrorCode::kNotAsymmetric,
                    "input tree is not automorphism-free");
  }
}

}  // namespace

const CanonicalCode& e7_code() {
  static const CanonicalCode code = canonical_code(e7());
  return code;
}

std::vector<VertexId> safe_leaves(const Tree& t) {
  require_asymmetric(t);
  std::vector<VertexId> out;
  for (const Leaf& leaf : leaves(t)) {
    auto smaller = delete_leaf(t, leaf.id).tree;
    if (smaller.size() >= 2 && is_asymmetric(smaller)) out.push_back(leaf.id);
  }
  return out;
}

ReductionTrace reduce_to_e7(const Tree& t, std::optional<std::uint64_t> seed) {
  require_asymmetric(t);
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);

  ReductionTrace trace;
  trace.start = t;
  Tree current = t;
  CanonicalCode code = canonical_code(current);
  while (code != e7_code()) {
    auto candidates = safe_leaves(current);
    if (candidates.empty()) {
      throw TreeError(ErrorCode::kStuckNotAtE7,
                      "no safe leaf in an asymmetric tree other than E7: " +
                          code.text);
    }
    VertexId chosen = candidates.front();
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      chosen = candidates[pick(*rng)];
    }
    auto deletion = delete_leaf(current, chosen);
    current = std::move(deletion.tree);
    code = canonical_code(current);
    trace.steps.push_back({chosen, std::move(deletion.id_map), code});
  }
  trace.end_code = code;
  return trace;
}

std::optional<std::string> check_trace(const ReductionTrace& trace) {
  Tree current = trace.start;
  if (current.size() < 2 || !is_asymmetric(current)) {
    return "start tree is not asymmetric";
  }
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    const std::string where = "step " + std::to_string(i + 1);
    if (!current.contains(step.leaf) || current.degree(step.leaf) != 1) {
      return where + ": vertex " + std::to_string(step.leaf) + " is not a leaf";
    }
    auto deletion = delete_leaf(current, step.leaf);
    if (deletion.id_map != step.id_map) return where + ": id map differs";
    current = std::move(deletion.tree);
    if (current.size() < 2 || !is_asymmetric(current)) {
      return where + ": intermediate tree is not asymmetric";
    }
    if (canonical_code(current) != step.code_after) {
      return where + ": recorded code differs";
    }
  }
  auto end = canonical_code(current);
  if (end != trace.end_code) return std::string("end code differs");
  if (end != e7_code()) return std::string("trace does not end at E7");
  return std::nullopt;
}

AscentChain chain_from_e7(const Tree& t) {
  auto trace = reduce_to_e7(t);

  // Walk the reduction backwards. to_replay maps the labeling of the tree at
  // the current stage onto the replayed tree grown from e7().
  Tree stage = trace.start;
  std::vector<Tree> stages{stage};
  for (const auto& step : trace.steps) {
    stage = delete_leaf(stage, step.leaf).tree;
    stages.push_back(stage);
  }
  auto to_replay = *find_isomorphism(stages.back(), e7());

  AscentChain chain;
  for (std::size_t k = trace.steps.size(); k-- > 0;) {
    const auto& step = trace.steps[k];
    const Tree& before = stages[k];
    const VertexId parent = before.neighbors(step.leaf).front();
    const auto replay_size = static_cast<VertexId>(stages[k + 1].size());
    chain.attach_at.push_back(to_replay[step.id_map[parent]]);

    std::vector<VertexId> widened(before.size());
    for (VertexId v = 0; v < before.size(); ++v) {
      widened[v] = v == step.leaf ? replay_size : to_replay[step.id_map[v]];
    }
    to_replay = std::move(widened);
  }
  return chain;
}

Tree replay_ascent(const AscentChain& chain) {
  Tree t = e7();
  for (VertexId at : chain.attach_at) t = add_leaf(t, at);
  return t;
}

HasseDiagram build_hasse(std::size_t n_max) {
  if (n_max < 7 || n_max > kMaxEnumerationN) {
    throw TreeError(ErrorCode::kOutOfRange,
                    "n_max=" + std::to_string(n_max) + " is outside 7.." +
                        std::to_string(kMaxEnumerationN));
  }
  HasseDiagram diagram;
  for (std::size_t n = 7; n <= n_max; ++n) {
    PosetLevel level{n, {}};
    for (auto& item : asymmetric_trees(n).drain()) {
      level.nodes.push_back({std::move(item.code), std::move(item.tree)});
    }
    diagram.levels.push_back(std::move(level));
  }

  for (std::size_t i = 1; i < diagram.levels.size(); ++i) {
    const auto& lower_level = diagram.levels[i - 1];
    std::set<std::string, CodeOrder> known;
    for (const auto& node : lower_level.nodes) known.insert(node.code.text);

    for (const auto& upper : diagram.levels[i].nodes) {
      std::map<std::string, VertexId, CodeOrder> reached;
      for (VertexId leaf : safe_leaves(upper.representative)) {
        auto lower = canonical_code(delete_leaf(upper.representative, leaf).tree);
        if (!known.contains(lower.text)) {
          throw std::logic_error("cover target missing from level " +
                                 std::to_string(lower_level.n) + ": " +
                                 lower.text);
        }
        reached.try_emplace(lower.text, leaf);
      }
      for (const auto& [lower_text, witness] : reached) {
        CanonicalCode lower{lower_text, lower_text.front() == 'B'
                                            ? CodeKind::kBicentral
                                            : CodeKind::kUnicentral};
        diagram.covers.push_back({std::move(lower), upper.code, witness});
      }
    }
  }
  return diagram;
}

std::vector<CanonicalCode> minimal_elements(const HasseDiagram& diagram) {
  std::vector<CanonicalCode> out;
  for (const auto& level : diagram.levels) {
    for (const auto& node : level.nodes) {
      if (safe_leaves(node.representative).empty()) out.push_back(node.code);
    }
  }
  return out;
}

std::vector<CanonicalCode> minimal_elements(std::size_t n_max) {
  return minimal_elements(build_hasse(n_max));
}

std::string to_dot(const HasseDiagram& diagram) {
  std::ostringstream out;
  out << "digraph aft {\n";
  for (const auto& level : diagram.levels) {
    out << "  subgraph level_" << level.n << " {\n    rank=same;\n";
    for (const auto& node : level.nodes) {
      out << "    \"" << node.code.text << "\" [label=\"n=" << level.n
          << "\"];\n";
    }
    out << "  }\n";
  }
  for (const auto& edge : diagram.covers) {
    out << "  \"" << edge.upper.text << "\" -> \"" << edge.lower.text
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_tsv(const HasseDiagram& diagram) {
  std::ostringstream out;
  out << "upper\tlower\twitness_leaf\n";
  for (const auto& edge : diagram.covers) {
    out << edge.upper.text << '\t' << edge.lower.text << '\t'
        << edge.witness_leaf << '\n';
  }
  return out.str();
}

std::string format_trace(const ReductionTrace& trace) {
  std::ostringstream out;
  out << "code " << canonical_code(trace.start).text << '\n';
  for (const auto& step : trace.steps) {
    out << "delete " << step.leaf << '\n';
    out << "code " << step.code_after.text << '\n';
  }
  return out.str();
}

}  // namespace aft
