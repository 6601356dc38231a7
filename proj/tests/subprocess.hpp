// Minimal popen-based runner for CLI-level tests. The binary under test is
// located through the NUPLUS_CLI environment variable (ctest sets it).
#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

struct CommandResult {
    int exit_code;
    std::string output;  // stdout and stderr combined
};

inline CommandResult run_command(const std::string& command) {
    std::string full = command + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + command);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

inline std::string cli_path() {
    const char* env = std::getenv("NUPLUS_CLI");
    if (!env || !*env)
        throw std::runtime_error("NUPLUS_CLI is not set; point it at the nuplus binary");
    return env;
}
