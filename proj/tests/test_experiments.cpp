#include <eoram/error.hpp>
#include <eoram/experiments.hpp>
#include <eoram/io.hpp>
#include <eoram/verify.hpp>

#include <doctest.h>

#include <filesystem>

using namespace eoram;

TEST_CASE("experiment registry")
{
    CHECK(experiments().size() == 10);
    CHECK_THROWS_AS(run_experiment("nope"), Error);
}

TEST_CASE("experiments are deterministic and their certificates verify from disk")
{
    for (const char * name : {"lex-k3", "theorem8", "lemma9"}) {
        auto a = run_experiment(name, {1, 3});
        auto b = run_experiment(name, {2, 3});
        CHECK(a.pass);
        CHECK(io::dump(a.details) == io::dump(b.details));
        REQUIRE(a.certificates.size() == b.certificates.size());

        auto dir = std::filesystem::temp_directory_path() / ("eoram-exp-" + std::string(name));
        std::filesystem::remove_all(dir);
        write_certificates(a, dir.string());
        CHECK(std::filesystem::exists(dir / "summary.json"));
        for (const auto & [file, cert] : a.certificates)
            CHECK(verify_certificate_json(io::read_file((dir / file).string())).ok);
        std::filesystem::remove_all(dir);
    }
}
