#include "critga/genotype.hpp"

#include "critga/error.hpp"

namespace critga {

Genotype::Genotype(std::size_t length, std::uint64_t bits) : bits_(bits & mask_for(length)), length_(length) {
  if (length == 0 || length > kMaxLength) {
    throw ConfigError("genotype length must be in [1, 64], got " + std::to_string(length), "n");
  }
}

Genotype Genotype::parse(std::string_view text) {
  Genotype g(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      g.set(i, true);
    } else if (text[i] != '0') {
      throw ConfigError("genotype string may only contain '0' and '1': '" + std::string(text) + "'");
    }
  }
  return g;
}

std::string Genotype::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

}  // namespace critga
