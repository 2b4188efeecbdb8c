#include <higgslab/higgslab.h>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "engine.hpp"

struct hl_engine {
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render(const higgslab::Json& report) { return report.dump(2) + "\n"; }

}  // namespace

extern "C" {

hl_engine* hl_engine_new(void) { return new (std::nothrow) hl_engine; }

void hl_engine_free(hl_engine* e) { delete e; }

char* hl_run(hl_engine* e, const char* command, const char* config_json,
             int parallel, int* exit_code) {
  if (exit_code) *exit_code = 2;
  if (!e) return nullptr;
  if (!command || !config_json) {
    e->last_error = "null argument";
    return dup_string(
        "{\n  \"tool\": \"higgslab\",\n  \"status\": \"fail\",\n"
        "  \"failure\": { \"code\": \"BadInput\", \"detail\": \"null argument\" }\n}\n");
  }
  try {
    higgslab::RunResult r =
        higgslab::run_command_text(command, config_json, parallel != 0);
    e->last_error.clear();
    if (r.exit_code != 0 && r.report.contains("failure")) {
      const higgslab::Json& fail = r.report.at("failure");
      e->last_error = fail.value("code", std::string("?")) + ": " +
                      fail.value("detail", std::string(""));
    }
    if (exit_code) *exit_code = r.exit_code;
    return dup_string(render(r.report));
  } catch (const std::exception& ex) {
    e->last_error = ex.what();
    return dup_string(
        "{\n  \"tool\": \"higgslab\",\n  \"status\": \"fail\",\n"
        "  \"failure\": { \"code\": \"Internal\", \"detail\": \"unexpected exception\" }\n}\n");
  }
}

const char* hl_last_error(const hl_engine* e) {
  return e ? e->last_error.c_str() : "";
}

void hl_free_string(char* s) { std::free(s); }

const char* hl_version(void) { return higgslab::engine_version(); }

}  // extern "C"
