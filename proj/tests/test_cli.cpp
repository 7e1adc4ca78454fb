#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

#include "quatring/io.hpp"

using namespace quatring;

namespace {

struct RunResult {
    std::string output;
    int exitCode = -1;
};

RunResult runCli(const std::string& args) {
    const std::string command = std::string(QUATRING_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string golden(const std::string& name) {
    return readFile(std::string(QUATRING_TEST_DATA) + "/../golden/" + name);
}

std::string dataFile(const std::string& name) {
    return std::string(QUATRING_TEST_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("ring-info matches golden output") {
    const RunResult run = runCli("ring-info --ring '{\"p\":2,\"r\":2,\"m\":2}'");
    CHECK(run.exitCode == 0);
    CHECK(run.output == golden("ring_info_gr42.json"));
}

TEST_CASE("weights for H(F3) match golden output and the split values") {
    const RunResult run = runCli("weights --ring '{\"p\":3,\"r\":1,\"m\":1}' --quat");
    CHECK(run.exitCode == 0);
    CHECK(run.output == golden("weights_hf3.json"));
    const auto j = nlohmann::json::parse(run.output);
    CHECK(j.at("weights").at("(1,0,0,0)") == "15/16");
    CHECK(j.at("weights").at("(1,1,1,0)") == "9/8");
    CHECK(j.at("homogeneous") == true);
}

TEST_CASE("weights for Z4 match golden output") {
    const RunResult run = runCli("weights --ring '{\"p\":2,\"r\":2,\"m\":1}'");
    CHECK(run.exitCode == 0);
    CHECK(run.output == golden("weights_z4.json"));
}

TEST_CASE("structure report for H(Z4) matches golden output") {
    const RunResult run = runCli("structure --ring '{\"p\":2,\"r\":2,\"m\":1}' --quat");
    CHECK(run.exitCode == 0);
    CHECK(run.output == golden("structure_hz4.json"));
    const auto j = nlohmann::json::parse(run.output);
    CHECK(j.at("frobenius") == true);
    CHECK(j.at("socle_size") == 2);
}

TEST_CASE("code-analyze matches golden output") {
    const RunResult run = runCli("code-analyze " + dataFile("code_f3_2x6.json"));
    CHECK(run.exitCode == 0);
    CHECK(run.output == golden("analyze_f3.json"));
    const auto j = nlohmann::json::parse(run.output);
    CHECK(j.at("d_hamming") == 5);
    CHECK(j.at("d_hom") == "75/16");
    CHECK(j.at("singleton").at("mds") == true);
    CHECK(j.at("enumerator") ==
          nlohmann::json::parse("[[0,1],[5,480],[6,6080]]"));
}

TEST_CASE("image matches golden output") {
    const RunResult run = runCli("image " + dataFile("code_f3_2x6.json"));
    CHECK(run.exitCode == 0);
    CHECK(run.output == golden("image_f3.json"));
    const auto j = nlohmann::json::parse(run.output);
    CHECK(j.at("length") == 24);
    CHECK(j.at("type_alpha") == true);
}

TEST_CASE("search matches golden output and is worker-count independent") {
    const std::string base =
        "search --ring '{\"p\":2,\"r\":1,\"m\":1}' --template paper-2x6";
    const RunResult two = runCli(base + " --jobs 2");
    CHECK(two.exitCode == 0);
    CHECK(two.output == golden("search_hf2.json"));
    const RunResult one = runCli(base + " --jobs 1");
    CHECK(one.output == two.output);
}

TEST_CASE("search from a template file agrees with the built-in template") {
    const RunResult builtin =
        runCli("search --ring '{\"p\":2,\"r\":1,\"m\":1}' --template paper-2x6 --jobs 2");
    const RunResult file = runCli("search --ring '{\"p\":2,\"r\":1,\"m\":1}' --template " +
                                  dataFile("template_2x6.json") + " --jobs 2");
    CHECK(file.exitCode == 0);
    CHECK(file.output == builtin.output);
}

TEST_CASE("budget-limited search exits 3 with a resume token, and resume completes") {
    const std::string base =
        "search --ring '{\"p\":2,\"r\":1,\"m\":1}' --template paper-2x6 --jobs 2";
    const RunResult partial = runCli(base + " --budget " + std::to_string(700ull * 256));
    CHECK(partial.exitCode == 3);
    CHECK(partial.output == golden("search_hf2_budget.json"));
    const auto j = nlohmann::json::parse(partial.output);
    CHECK(j.at("complete") == false);
    CHECK(j.at("resume").at("next_index") == 700);

    // Write the token and resume; the remainder completes with exit 0.
    const std::string tokenPath = "/tmp/quatring_test_token.json";
    writeFile(tokenPath, resumeTokenToJson(ResumeToken{
                             j.at("resume").at("fingerprint").get<std::string>(),
                             j.at("resume").at("next_index").get<std::uint64_t>()}));
    const RunResult rest = runCli(base + " --resume " + tokenPath);
    CHECK(rest.exitCode == 0);
    const auto restJson = nlohmann::json::parse(rest.output);
    CHECK(restJson.at("complete") == true);
    CHECK(restJson.at("scanned") == 4096 - 700);
}

TEST_CASE("minimal-candidate verification via the CLI") {
    const RunResult run = runCli(
        "structure --ring '{\"p\":2,\"r\":2,\"m\":1}' --quat --minimal-candidate --samples 50");
    CHECK(run.exitCode == 0);
    CHECK(run.output == golden("candidate_hz4.json"));
    const auto j = nlohmann::json::parse(run.output);
    CHECK(j.at("verified") == true);
    CHECK(j.at("generator") == "(2,2,2,2)");
}

TEST_CASE("ring-info with classification counts") {
    const RunResult run =
        runCli("ring-info --ring '{\"p\":3,\"r\":1,\"m\":1}' --quat --classify");
    CHECK(run.exitCode == 0);
    const auto j = nlohmann::json::parse(run.output);
    CHECK(j.at("cardinality") == 81);
    CHECK(j.at("zero_divisors") == 32);
    CHECK(j.at("idempotents") == 14);
    CHECK(j.at("a") == "2");
}

TEST_CASE("weight methods agree through the CLI") {
    const RunResult character =
        runCli("weights --ring '{\"p\":3,\"r\":1,\"m\":1}' --quat --method character");
    const RunResult mobius =
        runCli("weights --ring '{\"p\":3,\"r\":1,\"m\":1}' --quat --method mobius");
    const RunResult closed =
        runCli("weights --ring '{\"p\":3,\"r\":1,\"m\":1}' --quat --method closed");
    const auto a = nlohmann::json::parse(character.output);
    const auto b = nlohmann::json::parse(mobius.output);
    const auto c = nlohmann::json::parse(closed.output);
    CHECK(a.at("weights") == b.at("weights"));
    CHECK(a.at("weights") == c.at("weights"));
}

TEST_CASE("validation failures exit with 2") {
    CHECK(runCli("ring-info --ring '{\"p\":9,\"r\":1,\"m\":1}'").exitCode == 2);
    CHECK(runCli("ring-info --ring 'not json'").exitCode == 2);
    CHECK(runCli("code-analyze /nonexistent/file.json").exitCode == 2);
    CHECK(runCli("weights --ring '{\"p\":3,\"r\":1,\"m\":1}' --method bogus").exitCode == 2);
}

TEST_CASE("golden JSON is canonical: parse and re-dump is byte-identical") {
    for (const char* name : {"ring_info_gr42.json", "weights_hf3.json", "weights_z4.json",
                             "structure_hz4.json", "analyze_f3.json", "image_f3.json",
                             "search_hf2.json", "search_hf2_budget.json",
                             "candidate_hz4.json"}) {
        const std::string content = golden(name);
        const auto parsed = nlohmann::json::parse(content);
        CHECK(parsed.dump(2) + "\n" == content);
    }
}

TEST_CASE("--out writes the same bytes as stdout") {
    const std::string outPath = "/tmp/quatring_test_out.json";
    const RunResult run =
        runCli("ring-info --ring '{\"p\":2,\"r\":2,\"m\":2}' --out " + outPath);
    CHECK(run.exitCode == 0);
    CHECK(run.output.empty());
    CHECK(readFile(outPath) == golden("ring_info_gr42.json"));
}
