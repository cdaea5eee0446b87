#pragma once

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace recdiv::testing {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream content;
    content << file.rdbuf();
    return content.str();
}

// Runs the recdiv binary with shell redirection; RECDIV_CLI_PATH comes from
// the build system.
inline CliResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    static std::atomic<int> counter{0};
    const auto dir = std::filesystem::temp_directory_path();
    const std::string tag = std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const auto out_path = dir / ("recdiv_out_" + tag);
    const auto err_path = dir / ("recdiv_err_" + tag);
    const auto in_path = dir / ("recdiv_in_" + tag);
    {
        std::ofstream in(in_path, std::ios::binary);
        in << stdin_data;
    }
    const std::string command = std::string(RECDIV_CLI_PATH) + " " + args + " <" +
                                in_path.string() + " >" + out_path.string() + " 2>" +
                                err_path.string();
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    std::filesystem::remove(in_path);
    return result;
}

}  // namespace recdiv::testing
