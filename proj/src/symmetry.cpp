#include "qinv/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qinv {

QubitPermutation::QubitPermutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || hit[v])
      throw std::invalid_argument("permutation: image is not a bijection");
    hit[v] = true;
  }
}

QubitPermutation QubitPermutation::identity(int q) {
  std::vector<int> im(q);
  std::iota(im.begin(), im.end(), 0);
  return QubitPermutation(std::move(im));
}

QubitPermutation QubitPermutation::parse_cycles(std::string_view text, int q) {
  std::vector<int> im(q);
  std::iota(im.begin(), im.end(), 0);
  std::vector<bool> used(q, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cycle notation '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == '\t') {
      ++pos;
      continue;
    }
    if (c != '(') fail("expected '('");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) fail("missing ')'");
    std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
    std::vector<int> cycle;
    std::string tok;
    while (in >> tok) {
      for (char& ch : tok)
        if (ch == ',') ch = ' ';
      std::istringstream parts(tok);
      int site;
      while (parts >> site) {
        if (site < 1 || site > q) fail("site " + std::to_string(site) + " outside 1.." + std::to_string(q));
        if (used[site - 1]) fail("site " + std::to_string(site) + " repeated");
        used[site - 1] = true;
        cycle.push_back(site - 1);
      }
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) im[cycle[k]] = cycle[(k + 1) % cycle.size()];
    pos = close + 1;
  }
  return QubitPermutation(std::move(im));
}

int QubitPermutation::sign() const {
  std::vector<bool> seen(image_.size(), false);
  int s = 1;
  for (int j = 0; j < size(); ++j) {
    if (seen[j]) continue;
    int len = 0;
    for (int k = j; !seen[k]; k = image_[k]) {
      seen[k] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

QubitPermutation QubitPermutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int j = 0; j < size(); ++j) inv[image_[j]] = j;
  return QubitPermutation(std::move(inv));
}

QubitPermutation QubitPermutation::compose(const QubitPermutation& rho) const {
  if (rho.size() != size()) throw std::invalid_argument("permutation: size mismatch in compose");
  std::vector<int> im(image_.size());
  for (int j = 0; j < size(); ++j) im[j] = image_[rho.image_[j]];
  return QubitPermutation(std::move(im));
}

std::string QubitPermutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  for (int j = 0; j < size(); ++j) {
    if (seen[j] || image_[j] == j) continue;
    out += "(";
    for (int k = j; !seen[k]; k = image_[k]) {
      seen[k] = true;
      if (k != j) out += " ";
      out += std::to_string(k + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<QubitPermutation> all_permutations(int q) {
  std::vector<int> im(q);
  std::iota(im.begin(), im.end(), 0);
  std::vector<QubitPermutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

template <class T>
BasicState<T> permute_state_by_image(const std::vector<int>& image, const BasicState<T>& psi) {
  if (static_cast<int>(image.size()) != psi.qubits())
    throw std::invalid_argument("permute_state: permutation size " + std::to_string(image.size()) +
                                " does not match " + std::to_string(psi.qubits()) + " qubits");
  auto out = BasicState<T>::zero(psi.qubits());
  for (std::size_t n = 0; n < psi.dim(); ++n) {
    std::size_t m = 0;
    for (int j = 0; j < psi.qubits(); ++j)
      if (n >> j & 1) m |= std::size_t{1} << image[j];
    out[m] = psi[n];
  }
  return out;
}

template <class T>
BasicState<T> permute_state(const QubitPermutation& pi, const BasicState<T>& psi) {
  return permute_state_by_image(pi.image(), psi);
}

CombSpec permute_spec(const QubitPermutation& pi, const CombSpec& spec) {
  if (pi.size() != spec.qubits())
    throw std::invalid_argument("permute_spec: permutation size does not match spec");
  const int q = spec.qubits();
  std::vector<CombToken> grid(spec.grid().size());
  for (int r = 0; r < spec.copies(); ++r)
    for (int c = 0; c < q; ++c) grid[r * q + pi(c)] = spec.at(r, c);
  return CombSpec(q, spec.copies(), std::move(grid), spec.prefactor());
}

EpsNetwork permute_network(const QubitPermutation& pi, const EpsNetwork& net) {
  if (pi.size() != net.qubits())
    throw std::invalid_argument("permute_network: permutation size does not match network");
  const int q = net.qubits();
  std::vector<EpsSlot> slots(net.slots().size());
  for (int f = 0; f < net.factors(); ++f)
    for (int c = 0; c < q; ++c) slots[f * q + pi(c)] = net.at(f, c);
  return EpsNetwork(q, net.factors(), std::move(slots), net.prefactor());
}

std::vector<CombOrbitElement> comb_orbit(const CombSpec& spec, std::size_t max) {
  std::vector<CombOrbitElement> out;
  std::set<std::string> seen;
  for (const auto& pi : all_permutations(spec.qubits())) {
    auto image = permute_spec(pi, spec);
    if (!seen.insert(image.canonical().to_string()).second) continue;
    out.push_back({pi, image});
    if (max && out.size() >= max) break;
  }
  return out;
}

std::vector<NetworkOrbitElement> network_orbit(const EpsNetwork& net, std::size_t max) {
  // The network canonical form is not a complete invariant, so an orbit may
  // keep two equal images; ranks are unaffected.
  std::vector<NetworkOrbitElement> out;
  std::set<std::string> seen;
  for (const auto& pi : all_permutations(net.qubits())) {
    auto image = permute_network(pi, net);
    if (!seen.insert(image.canonical().to_string()).second) continue;
    out.push_back({pi, image});
    if (max && out.size() >= max) break;
  }
  return out;
}

template ExactState permute_state(const QubitPermutation&, const ExactState&);
template FloatState permute_state(const QubitPermutation&, const FloatState&);
template ExactState permute_state_by_image(const std::vector<int>&, const ExactState&);
template FloatState permute_state_by_image(const std::vector<int>&, const FloatState&);

}  // namespace qinv
