#include "qhrigid/data.hpp"

#include <filesystem>
#include <stdexcept>

namespace qhr {

AlgebraSpec load_algebra_spec(const std::string& path_or_name) {
  if (std::filesystem::exists(path_or_name)) return parse_alg_file(path_or_name);
  std::string name = std::filesystem::path(path_or_name).filename().string();
  if (name.size() < 4 || name.substr(name.size() - 4) != ".alg") name += ".alg";
  const std::string* text = nullptr;
  try {
    text = &bundled_file(name);
  } catch (const std::out_of_range&) {
    throw InputError("cannot open " + path_or_name);
  }
  return parse_alg_string(*text, name);
}

AlgebraPtr load_algebra(const std::string& path_or_name, unsigned long characteristic) {
  AlgebraSpec spec = load_algebra_spec(path_or_name);
  if (characteristic != 0 && characteristic != spec.field.characteristic()) {
    if (!is_prime(characteristic)) throw InputError("field characteristic must be 0 or a prime");
    spec.field = Field(characteristic);
    for (auto& rel : spec.relations)
      for (auto& t : rel.terms) t.coeff = spec.field.reduce(t.coeff);
  }
  return std::make_shared<const Algebra>(build_algebra(std::move(spec)));
}

}  // namespace qhr
