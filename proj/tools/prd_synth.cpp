// Writes labeled Gaussian-blob feature files for trying out the pipeline.

#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prd/feature_file.hpp"
#include "prd/synthetic.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generate labeled Gaussian blob features"};
    prd::BlobSpec spec;
    std::string out;
    std::vector<int> keep;
    app.add_option("--out", out, "output feature file")->required();
    app.add_option("--classes", spec.classes)->check(CLI::PositiveNumber);
    app.add_option("--per-class", spec.per_class)->check(CLI::PositiveNumber);
    app.add_option("--dim", spec.dim)->check(CLI::PositiveNumber);
    app.add_option("--separation", spec.separation);
    app.add_option("--sigma", spec.sigma);
    app.add_option("--seed", spec.seed);
    app.add_option("--keep", keep, "only write these class ids");
    CLI11_PARSE(app, argc, argv);

    try {
        prd::FeatureSet blobs = prd::make_blobs(spec);
        if (!keep.empty()) {
            std::vector<std::size_t> rows;
            const auto& labels = *blobs.labels();
            for (std::size_t i = 0; i < labels.size(); ++i) {
                for (int c : keep) {
                    if (labels[i] == c) {
                        rows.push_back(i);
                    }
                }
            }
            blobs = blobs.subset(rows);
        }
        prd::write_feature_file(out, blobs);
        std::cout << "wrote " << blobs.rows() << " x " << blobs.cols() << " to " << out << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error_code=1 " << e.what() << "\n";
        return 1;
    }
    return 0;
}
