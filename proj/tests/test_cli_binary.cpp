// Drives the installed `prd` executable to check exit statuses and the
// single-line error format.

#include <doctest.h>

#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "prd/feature_file.hpp"
#include "prd/synthetic.hpp"
#include "support/temp_dir.hpp"

using prd::testing::slurp;
using prd::testing::spit;
using prd::testing::TempDir;

namespace {

struct Outcome {
    int status;
    std::string err;
};

Outcome run(const TempDir& dir, const std::string& args) {
    const auto err_path = dir / "stderr.txt";
    const std::string cmd = std::string("'") + PRD_CLI_PATH + "' " + args + " > /dev/null 2> '" +
                            err_path.string() + "'";
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(err_path)};
}

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("exit codes") {
    TempDir dir("bin");
    prd::BlobSpec spec;
    spec.classes = 3;
    spec.per_class = 20;
    spec.dim = 4;
    prd::write_feature_file(dir / "a.prdf", prd::make_blobs(spec));
    spec.dim = 5;
    prd::write_feature_file(dir / "b.prdf", prd::make_blobs(spec));
    spit(dir / "bad.prdf", "PRDX0000000000000000000000000000");
    spit(dir / "p.json", R"({"size": 2, "weights": [2, 2]})");

    const auto ok = run(dir, "compute " + q(dir / "a.prdf") + " " + q(dir / "a.prdf") +
                                 " --k 3 --runs 1 --m 5 --out " + q(dir / "r.json"));
    CHECK(ok.status == 0);
    CHECK(ok.err.empty());

    const auto parse = run(dir, "compute " + q(dir / "a.prdf") + " " + q(dir / "bad.prdf") +
                                    " --out " + q(dir / "r.json"));
    CHECK(parse.status == 2);
    CHECK(parse.err.rfind("error_code=2 field=magic", 0) == 0);

    const auto dim = run(dir, "compute " + q(dir / "a.prdf") + " " + q(dir / "b.prdf") +
                                  " --out " + q(dir / "r.json"));
    CHECK(dim.status == 3);
    CHECK(dim.err.rfind("error_code=3", 0) == 0);

    const auto norm =
        run(dir, "hist " + q(dir / "p.json") + " " + q(dir / "p.json") + " --out " +
                     q(dir / "h.json"));
    CHECK(norm.status == 4);
    CHECK(norm.err.rfind("error_code=4", 0) == 0);

    const auto missing = run(dir, "mode-experiment " + q(dir / "a.prdf") +
                                      " --ref-classes 2 --steps 5 --out " + q(dir / "m"));
    CHECK(missing.status == 5);
    CHECK(missing.err.rfind("error_code=5 missing_classes=3,4", 0) == 0);

    for (const auto* o : {&parse, &dim, &norm, &missing}) {
        CHECK(std::count(o->err.begin(), o->err.end(), '\n') == 1);
    }
}
