#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <initializer_list>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* path = std::getenv("HOMSIM_CLI");
    REQUIRE_MESSAGE(path != nullptr, "HOMSIM_CLI must point at the built binary");
    return path;
}

RunResult run(const std::string& args) {
    const std::string command = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe))
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("scan: row count, header, zero-delay coincidence value") {
    const auto res = run("scan --photons-per-mode 2 --fwhm-nm 4 --center-nm 780 "
                         "--scan-um -400:400:801 --events 2,2 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(count_lines(res.output) == 802);  // header + 801 rows
    std::istringstream is(res.output);
    std::string line;
    std::getline(is, line);
    CHECK(line == "x_um,alpha_sq,W_j2,W_j1,W_j0,W_indis,W_inter,W_dist,P_2_2");
    bool saw_zero_row = false;
    while (std::getline(is, line))
        if (line.rfind("0,", 0) == 0) {
            saw_zero_row = true;
            CHECK(line == "0,1,1,0,0,1,0,0,0.25");
        }
    CHECK(saw_zero_row);
}

TEST_CASE("scan: suppressed coincidence at zero delay for one photon per mode") {
    const auto res = run("scan --photons-per-mode 1 --fwhm-nm 4 --center-nm 780 "
                         "--scan-um -100:100:5 --events 1,1");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\n0,1,1,0,1,0,0,0\n") != std::string::npos);
}

TEST_CASE("scan: explicit event order is preserved in the columns") {
    const auto res = run("scan --photons-per-mode 2 --sigma-omega 7.4e12 "
                         "--scan-um -10:10:3 --events 2,2 --events 4,0");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("P_2_2,P_4_0") != std::string::npos);
}

TEST_CASE("scan: --events all expands bunching-first") {
    const auto res = run("scan --photons-per-mode 1 --sigma-omega 7.4e12 "
                         "--scan-um -10:10:3 --events all");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("P_2_0,P_0_2,P_1_1") != std::string::npos);
}

TEST_CASE("scan: json output parses and is stable") {
    const auto res = run("scan --photons-per-mode 1 --sigma-omega 7.4e12 "
                         "--scan-um -50:50:11 --events 1,1 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"photons_per_mode\": 1") != std::string::npos);
    CHECK(res.output.find("\"columns\"") != std::string::npos);
    const auto again = run("scan --photons-per-mode 1 --sigma-omega 7.4e12 "
                           "--scan-um -50:50:11 --events 1,1 --format json");
    CHECK(res.output == again.output);
}

TEST_CASE("scan: --output writes the file") {
    const auto path = std::filesystem::temp_directory_path() / "homsim_cli_scan.csv";
    std::filesystem::remove(path);
    const auto res = run("scan --photons-per-mode 1 --sigma-omega 7.4e12 "
                         "--scan-um -50:50:11 --events 1,1 --output " + path.string());
    CHECK(res.exit_code == 0);
    REQUIRE(std::filesystem::exists(path));
    std::ifstream is(path);
    std::string header;
    std::getline(is, header);
    CHECK(header == "x_um,alpha_sq,W_j1,W_j0,W_indis,W_inter,W_dist,P_1_1");
    std::filesystem::remove(path);
}

TEST_CASE("scan: oracle check passes on a valid configuration") {
    const auto res = run("scan --photons-per-mode 2 --fwhm-nm 4 --center-nm 780 "
                         "--scan-um -100:100:5 --events all --oracle-check");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("oracle check passed") != std::string::npos);
}

TEST_CASE("usage errors exit with 1 and a one-line diagnostic") {
    for (const std::string args : {
             "scan --photons-per-mode 0 --sigma-omega 7e12 --scan-um -1:1:3 --events 0,0",
             "scan --photons-per-mode 2 --scan-um -1:1:3 --events 2,2",
             "scan --photons-per-mode 2 --sigma-omega 7e12 --scan-um -1:1:1 --events 2,2",
             "scan --photons-per-mode 2 --sigma-omega 7e12 --scan-um 5:-5:11 --events 2,2",
             "scan --photons-per-mode 2 --sigma-omega 7e12 --scan-um -1:1:3 --events 3,0",
             "scan --photons-per-mode 2 --sigma-omega 7e12 --scan-um -1:1:3 --events 2,2 "
             "--format yaml",
             "scan --photons-per-mode 1 --sigma-omega 7e12 --fwhm-nm 4 --center-nm 780 "
             "--scan-um -1:1:3 --events 1,1",
             "extrema --photons-per-mode 2 --event 1,1",
             "nonsense",
         }) {
        const auto res = run(args);
        CHECK_MESSAGE(res.exit_code == 1, args);
        CHECK_MESSAGE(count_lines(res.output) == 1, (args + " -> " + res.output));
    }
}

TEST_CASE("extrema: the (2,2) report") {
    const auto res = run("extrema --photons-per-mode 2 --event 2,2 "
                         "--fwhm-nm 4 --center-nm 780");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("classification: non-monotonic") != std::string::npos);
    CHECK(res.output.find("u* = 0.6666666") != std::string::npos);
    CHECK(res.output.find("P* = 0.208333333333") != std::string::npos);
    CHECK(res.output.find("x* = +/-36.29809") != std::string::npos);
    CHECK(res.output.find("P(x=0) = 0.25") != std::string::npos);
    CHECK(res.output.find("P(x->inf) = 0.375") != std::string::npos);
}

TEST_CASE("extrema: monotonic bunching event, no spectral model needed") {
    const auto res = run("extrema --photons-per-mode 2 --event 4,0");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("classification: monotonic") != std::string::npos);
    CHECK(res.output.find("no interior extrema") != std::string::npos);
}

TEST_CASE("extrema: json format") {
    const auto res = run("extrema --photons-per-mode 2 --event 2,2 --format json "
                         "--fwhm-nm 4 --center-nm 780");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"classification\": \"non-monotonic\"") != std::string::npos);
    CHECK(res.output.find("\"kind\": \"minimum\"") != std::string::npos);
}

TEST_CASE("figures: writes the five-file pack") {
    const auto dir = std::filesystem::temp_directory_path() / "homsim_cli_figures";
    std::filesystem::remove_all(dir);
    const auto res = run("figures --out-dir " + dir.string() + " --scan-um -400:400:81");
    CHECK(res.exit_code == 0);
    for (const char* name : {"weights_N2.csv", "weights_N4.csv", "probs_N4.csv",
                             "weights_N6.csv", "probs_N6.csv"})
        CHECK_MESSAGE(std::filesystem::exists(dir / name), name);
    std::filesystem::remove_all(dir);
}

TEST_CASE("table1: exact fractions for one and two photons per mode") {
    const auto res = run("table1");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("1/2  1/4") != std::string::npos);
    CHECK(res.output.find("0  1/2") != std::string::npos);
    CHECK(res.output.find("3/8  3/16  1/16") != std::string::npos);
    CHECK(res.output.find("1/4  1/8  3/8") != std::string::npos);
}

}  // TEST_SUITE
