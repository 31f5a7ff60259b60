#include "taureg/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace taureg {

namespace {

struct Fixture {
  const char* name;
  const char* source;
};

constexpr Fixture kFixtures[] = {
    {"ALG-A", R"qa(# Two 3-arrow layers with skew-commutativity relations.
vertices: 1 2 3
arrow a1: 2 -> 1
arrow a2: 2 -> 1
arrow a3: 2 -> 1
arrow b1: 3 -> 2
arrow b2: 3 -> 2
arrow b3: 3 -> 2
relations:
a1*b1
a2*b2
a3*b3
a1*b2 - a2*b1
a1*b3 + a3*b1
a2*b3 - a3*b2
)qa"},
    {"ALG-B", R"qa(# A3 linear quiver 1 <- 2 <- 3 with the zero relation ab.
vertices: 1 2 3
arrow a: 2 -> 1
arrow b: 3 -> 2
relations:
a*b
)qa"},
    {"ALG-B0", R"qa(# A3 linear quiver 1 <- 2 <- 3, hereditary.
vertices: 1 2 3
arrow a: 2 -> 1
arrow b: 3 -> 2
)qa"},
    {"ALG-C", R"qa(# Two vertices, a: 1 -> 2 and two arrows back; all paths of length 2 vanish.
vertices: 1 2
arrow a: 1 -> 2
arrow b: 2 -> 1
arrow c: 2 -> 1
relations:
a*b
a*c
b*a
c*a
)qa"},
    {"ALG-K", R"qa(# Kronecker quiver.
vertices: 1 2
arrow x: 2 -> 1
arrow y: 2 -> 1
)qa"},
};

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : kFixtures) out.emplace_back(f.name);
  return out;
}

std::string_view fixture_source(std::string_view name) {
  for (const auto& f : kFixtures)
    if (name == f.name) return f.source;
  throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

std::string fixture_file_name(std::string_view name) {
  fixture_source(name);
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return c == '-' ? '_' : static_cast<char>(std::tolower(c)); });
  return s + ".qa";
}

}  // namespace taureg
