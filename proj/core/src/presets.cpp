#include "tfbjn/presets.hpp"

#include <array>
#include <stdexcept>

namespace tfbjn {

std::vector<std::string_view> preset_names() {
  return {"zero", "four-gaussians", "two-gaussians", "two-chirps", "bat-surrogate"};
}

Signal make_preset(std::string_view name, std::size_t n, double fs) {
  if (name == "zero") {
    Signal s = gen_gaussian({0, 0, 1.0, 0.0}, n, fs);
    return s;
  }
  if (name == "four-gaussians") {
    std::array<Signal, 4> parts = {
        gen_gaussian({-3.0, 0.0, 1.0, 1.0}, n, fs),
        gen_gaussian({3.0, 0.0, 1.0, 1.0}, n, fs),
        gen_gaussian({0.0, -3.0, 1.0, 1.0}, n, fs),
        gen_gaussian({0.0, 3.0, 1.0, 1.0}, n, fs),
    };
    return superpose(parts);
  }
  if (name == "two-gaussians") {
    std::array<Signal, 2> parts = {
        gen_gaussian({-2.0, -1.0, 1.0, 1.0}, n, fs),
        gen_gaussian({2.0, 1.0, 1.0, 1.0}, n, fs),
    };
    return superpose(parts);
  }
  if (name == "two-chirps") {
    std::array<Signal, 2> parts = {
        gen_linear_chirp(1.0, 5.0, n, fs),
        gen_linear_chirp(3.0, 7.0, n, fs),
    };
    return superpose(parts);
  }
  if (name == "bat-surrogate") {
    std::array<Signal, 3> parts = {
        gen_linear_chirp(7.0, 3.0, n, fs),
        gen_linear_chirp(5.5, 2.0, n, fs),
        gen_linear_chirp(4.0, 1.5, n, fs),
    };
    return superpose(parts);
  }
  throw std::invalid_argument("unknown preset: " + std::string(name));
}

std::optional<TFBox> preset_cross_term_box(std::string_view name) {
  if (name == "two-gaussians") return TFBox{-2.0, 2.0, -2.0, 2.0};
  if (name == "two-chirps") return TFBox{-4.0, 4.0, 3.5, 4.5};
  if (name == "four-gaussians") return TFBox{-1.0, 1.0, -1.0, 1.0};
  return std::nullopt;
}

}  // namespace tfbjn
