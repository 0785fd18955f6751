#include "endosign/roots/catalog.hpp"

#include <cctype>
#include <set>

namespace endosign {

namespace {

bool adjacent_in_chain(std::size_t i, std::size_t j) { return i + 1 == j || j + 1 == i; }

void check_type(char type, std::size_t n) {
  auto bad = [&](const char* why) {
    throw InputError(std::string("unsupported type ") + type + std::to_string(n) + ": " + why);
  };
  if (n == 0) bad("rank must be positive");
  if (n > 8) bad("rank of a simple factor is limited to 8");
  switch (type) {
    case 'A': break;
    case 'B':
    case 'C':
      if (n < 2) bad("needs rank >= 2");
      break;
    case 'D':
      if (n < 3) bad("needs rank >= 3");
      break;
    case 'E':
      if (n < 6) bad("needs rank 6, 7 or 8");
      break;
    case 'F':
      if (n != 4) bad("only F4 exists");
      break;
    case 'G':
      if (n != 2) bad("only G2 exists");
      break;
    default: bad("unknown type letter");
  }
}

}  // namespace

long cartan_entry(char type, std::size_t n, std::size_t i, std::size_t j) {
  check_type(type, n);
  if (i == j) return 2;
  switch (type) {
    case 'A': return adjacent_in_chain(i, j) ? -1 : 0;
    case 'B':
      // last simple root short
      if (i == n - 2 && j == n - 1) return -2;
      return adjacent_in_chain(i, j) ? -1 : 0;
    case 'C':
      // last simple root long
      if (i == n - 1 && j == n - 2) return -2;
      return adjacent_in_chain(i, j) ? -1 : 0;
    case 'D': {
      // chain 0..n-2, node n-1 attached to n-3
      auto linked = [&](std::size_t a, std::size_t b) {
        if (a == n - 1 || b == n - 1) {
          const std::size_t other = a == n - 1 ? b : a;
          return other == n - 3;
        }
        return adjacent_in_chain(a, b);
      };
      return linked(i, j) ? -1 : 0;
    }
    case 'E': {
      // Bourbaki: 1-3-4-5-...-n chain, 2 attached to 4 (0-based: 0-2-3-..., 1-3)
      auto linked = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        if (a == 0 && b == 2) return true;
        if (a == 1 && b == 3) return true;
        return a >= 2 && b == a + 1;
      };
      return linked(i, j) ? -1 : 0;
    }
    case 'F':
      if (i == 1 && j == 2) return -2;
      return adjacent_in_chain(i, j) ? -1 : 0;
    case 'G':
      // a_0 short, a_1 long
      if (i == 1 && j == 0) return -3;
      return -1;
    default: break;
  }
  throw InputError("unknown type");
}

RootDatum build_simple(char type, std::size_t n, Isogeny isogeny) {
  check_type(type, n);
  std::vector<IntVector> roots(n, IntVector(n, Integer(0)));
  std::vector<IntVector> coroots(n, IntVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (isogeny == Isogeny::SimplyConnected) {
        roots[i][j] = cartan_entry(type, n, i, j);
        coroots[i][j] = i == j ? 1 : 0;
      } else {
        roots[i][j] = i == j ? 1 : 0;
        coroots[i][j] = cartan_entry(type, n, j, i);
      }
    }
  }
  std::string label = std::string(1, type) + std::to_string(n) +
                      (isogeny == Isogeny::SimplyConnected ? ":sc" : ":ad");
  return RootDatum::from_simple(n, roots, coroots, label);
}

RootDatum build_torus(std::size_t rank) {
  if (rank == 0 || rank > 8) throw InputError("torus rank must be between 1 and 8");
  return RootDatum::from_simple(rank, {}, {}, "T" + std::to_string(rank));
}

RootDatum product(const std::vector<RootDatum>& factors, std::string label) {
  std::size_t rank = 0;
  for (const auto& f : factors) rank += f.rank();
  std::vector<IntVector> roots, coroots;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (std::size_t i = 0; i < f.semisimple_rank(); ++i) {
      IntVector r(rank, Integer(0)), c(rank, Integer(0));
      for (std::size_t k = 0; k < f.rank(); ++k) {
        r[offset + k] = f.simple_root(i)[k];
        c[offset + k] = f.simple_coroot(i)[k];
      }
      roots.push_back(std::move(r));
      coroots.push_back(std::move(c));
    }
    offset += f.rank();
  }
  return RootDatum::from_simple(rank, roots, coroots, std::move(label));
}

RootDatum build_named(const std::string& spec) {
  std::string s;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const unsigned char ch = static_cast<unsigned char>(spec[i]);
    // UTF-8 multiplication sign
    if (ch == 0xC3 && i + 1 < spec.size() && static_cast<unsigned char>(spec[i + 1]) == 0x97) {
      s.push_back('*');
      ++i;
    } else if (ch == 'x') {
      s.push_back('*');
    } else if (!std::isspace(ch)) {
      s.push_back(static_cast<char>(ch));
    }
  }
  if (s.empty()) throw InputError("empty root datum spec");

  std::vector<RootDatum> factors;
  std::vector<std::string> labels;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find('*', start), s.size());
    const std::string tok = s.substr(start, end - start);
    if (tok.empty()) throw InputError("empty factor in root datum spec '" + spec + "'");
    const std::size_t colon = tok.find(':');
    const std::string head = tok.substr(0, colon);
    const std::string tag = colon == std::string::npos ? "sc" : tok.substr(colon + 1);
    if (head.size() < 2) throw InputError("malformed factor '" + tok + "' in '" + spec + "'");
    const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(head[0])));
    const std::string digits = head.substr(1);
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("malformed factor '" + tok + "'");
    }
    const std::size_t n = std::stoul(digits);
    if (type == 'T') {
      if (colon != std::string::npos) throw InputError("torus factor takes no isogeny tag");
      factors.push_back(build_torus(n));
      labels.push_back(factors.back().label());
    } else {
      Isogeny iso;
      if (tag == "sc") {
        iso = Isogeny::SimplyConnected;
      } else if (tag == "ad") {
        iso = Isogeny::Adjoint;
      } else {
        throw InputError("unknown isogeny tag '" + tag + "' (expected sc or ad)");
      }
      factors.push_back(build_simple(type, n, iso));
      labels.push_back(factors.back().label());
    }
    start = end + 1;
  }
  if (factors.size() == 1) return factors.front();
  std::string label;
  for (std::size_t i = 0; i < labels.size(); ++i) label += (i ? "*" : "") + labels[i];
  return product(factors, label);
}

Integer weyl_group_order_formula(char type, std::size_t n) {
  check_type(type, n);
  Integer fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<unsigned long>(k);
  Integer two_n = 1;
  for (std::size_t k = 0; k < n; ++k) two_n *= 2;
  switch (type) {
    case 'A': return fact * static_cast<unsigned long>(n + 1);
    case 'B':
    case 'C': return two_n * fact;
    case 'D': return two_n / 2 * fact;
    case 'E': return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
    case 'F': return 1152;
    case 'G': return 12;
    default: break;
  }
  throw InputError("unknown type");
}

std::vector<CatalogEntry> catalog(const std::string& filter) {
  struct Range {
    char type;
    std::size_t lo, hi;
  };
  const Range ranges[] = {{'A', 1, 8}, {'B', 2, 8}, {'C', 2, 8}, {'D', 3, 8},
                          {'E', 6, 8}, {'F', 4, 4}, {'G', 2, 2}};
  std::vector<CatalogEntry> out;
  for (const auto& r : ranges) {
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
      const RootDatum sc = build_simple(r.type, n, Isogeny::SimplyConnected);
      const Integer det = sc.cartan_matrix().determinant();
      const std::string base = std::string(1, r.type) + std::to_string(n);
      std::vector<std::string> names;
      if (det == 1) {
        names.push_back(base);
      } else {
        names.push_back(base + ":sc");
        names.push_back(base + ":ad");
      }
      for (const auto& name : names) {
        if (!filter.empty() && name.find(filter) == std::string::npos) continue;
        out.push_back(CatalogEntry{name, n, sc.num_roots(), weyl_group_order_formula(r.type, n)});
      }
    }
  }
  return out;
}

}  // namespace endosign
