#include "abbrev/logging.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

namespace abbrev::log {
namespace {

Level parse_env() {
  const char* v = std::getenv("ABBREV_LOG");
  if (v == nullptr) return Level::warn;
  const std::string s(v);
  if (s == "debug" || s == "0") return Level::debug;
  if (s == "info" || s == "1") return Level::info;
  if (s == "warn" || s == "2") return Level::warn;
  if (s == "error" || s == "3") return Level::error;
  return Level::warn;
}

std::optional<Level>& override_level() {
  static std::optional<Level> lvl;
  return lvl;
}

const char* name(Level lvl) {
  switch (lvl) {
    case Level::debug: return "debug";
    case Level::info: return "info";
    case Level::warn: return "warn";
    case Level::error: return "error";
  }
  return "?";
}

}  // namespace

Level level() {
  if (override_level()) return *override_level();
  static const Level env = parse_env();
  return env;
}

void set_level(Level lvl) { override_level() = lvl; }

void write(Level lvl, const std::string& msg) {
  if (lvl < level()) return;
  std::cerr << "[abbrev] " << name(lvl) << ": " << msg << "\n";
}

}  // namespace abbrev::log
