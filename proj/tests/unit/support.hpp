#pragma once

#include <optional>

#include "cliquewalk/error.hpp"

template <typename F>
std::optional<cliquewalk::Errc> error_of(F&& f) {
  try {
    f();
  } catch (const cliquewalk::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
