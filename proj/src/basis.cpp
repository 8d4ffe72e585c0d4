#include "permpoly/basis.hpp"

#include <algorithm>
#include <sstream>

namespace permpoly {

Basis::Basis(std::vector<Permutation> members) : members_(std::move(members)) {
  if (members_.empty())
    throw std::invalid_argument("basis must be nonempty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

Basis Basis::parse(const std::string& text) {
  std::vector<Permutation> members;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) members.push_back(Permutation::parse(tok));
  return Basis(std::move(members));
}

std::string Basis::to_string() const {
  std::string out;
  for (const auto& m : members_) {
    if (!out.empty()) out += ' ';
    out += m.to_string();
  }
  return out;
}

bool avoids_basis(const Permutation& host, const Basis& basis) {
  for (const auto& b : basis.members())
    if (involves(b, host)) return false;
  return true;
}

Basis apply_symmetry(Symmetry s, const Basis& basis) {
  std::vector<Permutation> out;
  out.reserve(basis.members().size());
  for (const auto& m : basis.members()) out.push_back(apply_symmetry(s, m));
  return Basis(std::move(out));
}

Basis canonical_basis(const Basis& basis) {
  Basis best = basis;
  for (Symmetry s : kAllSymmetries) {
    Basis img = apply_symmetry(s, basis);
    if (img < best) best = img;
  }
  return best;
}

}  // namespace permpoly
