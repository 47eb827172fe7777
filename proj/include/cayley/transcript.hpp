#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cayley {

/// Machine-readable search log, one JSON object per line.
class Transcript {
 public:
  void add(nlohmann::json line) { lines_.push_back(std::move(line)); }
  const std::vector<nlohmann::json>& lines() const { return lines_; }
  bool empty() const { return lines_.empty(); }
  std::string to_jsonl() const {
    std::string out;
    for (const auto& l : lines_) out += l.dump() + "\n";
    return out;
  }

 private:
  std::vector<nlohmann::json> lines_;
};

/// Appends to `t` if non-null.
inline void note(Transcript* t, nlohmann::json line) {
  if (t) t->add(std::move(line));
}

}  // namespace cayley
