// Command-line front end: classify tensors of border rank <= 2, compute
// exact ranks, produce certified decompositions, run the symmetric-rank
// comparison, and generate seeded test instances.
//
// Exit codes: 0 success, 1 input error, 2 outside sigma_2 (a successful
// determination), 3 tensor/symmetric rank disagreement.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sigma2/io.hpp"

using namespace sigma2;

namespace {

std::vector<Rat> parse_params(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rat::parse(item));
    if (out.empty()) throw Error("empty parameter list");
    return out;
}

Shape parse_shape(const std::string& text) {
    std::vector<int> dims;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, 'x')) {
        try {
            dims.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw Error("malformed shape '" + text + "' (expected like 2x3x4)");
        }
    }
    return Shape(dims);
}

std::vector<int> parse_modes(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw Error("malformed mode list '" + csv + "'");
        }
    }
    return out;
}

void emit(const json& j) {
    std::cout << j.dump() << "\n";
}

int run_classify(const std::string& path, bool rank_only) {
    Tensor<Rat> t = tensor_from_json(parse_json_file(path));
    json report = classify_report(t);
    if (rank_only) {
        emit(json{{"rank", report.at("rank")}, {"stratum", report.at("stratum")}});
    } else {
        emit(report);
    }
    return report.at("stratum") == "beyond_sigma2" ? 2 : 0;
}

int run_decompose(const std::string& path, const std::string& params_csv,
                  const std::string& out_path) {
    Tensor<Rat> t = tensor_from_json(parse_json_file(path));
    std::optional<TangentParams> params;
    if (!params_csv.empty()) params = TangentParams{parse_params(params_csv)};

    Decomposition dec;
    try {
        dec = decompose(t, params);
    } catch (const Error& e) {
        std::string what = e.what();
        if (what.find("not in sigma_2") != std::string::npos) {
            emit(json{{"error", what}, {"stratum", "beyond_sigma2"}});
            return 2;
        }
        throw;
    }
    bool ok = verify(dec, t);
    json dec_json = decomposition_to_json(dec);
    json report{{"verified", ok}, {"claimed_rank", dec.claimed_rank}};
    if (out_path.empty()) {
        report["decomposition"] = dec_json;
    } else {
        write_json_file(out_path, dec_json);
        report["out"] = out_path;
    }
    emit(report);
    return ok ? 0 : 1;
}

int run_verify(const std::string& dec_path, const std::string& tensor_path) {
    Decomposition dec = decomposition_from_json(parse_json_file(dec_path));
    Tensor<Rat> t = tensor_from_json(parse_json_file(tensor_path));
    bool ok = verify(dec, t);
    emit(json{{"verified", ok}});
    return ok ? 0 : 1;
}

int run_comon(const std::string& path) {
    HomPoly f = poly_from_json(parse_json_file(path));
    SymRankReport r = comon_check(f);
    emit(comon_report(r));
    return r.equal ? 0 : 3;
}

int run_gen(const std::string& kind, const std::string& shape, const std::string& modes,
            std::uint64_t seed, int height, const std::string& out_path) {
    GenSpec spec;
    spec.kind = gen_kind_of(kind);
    spec.shape = parse_shape(shape);
    if (!modes.empty()) spec.tangent_modes = parse_modes(modes);
    spec.seed = seed;
    spec.height = height;

    GeneratedInstance inst = generate(spec);
    json tensor = tensor_to_json(inst.tensor);
    json sidecar = sidecar_to_json(inst.sidecar);
    if (out_path.empty()) {
        emit(json{{"tensor", tensor}, {"sidecar", sidecar}});
    } else {
        write_json_file(out_path, tensor);
        write_json_file(out_path + ".sidecar.json", sidecar);
        emit(json{{"out", out_path}, {"sidecar", out_path + ".sidecar.json"}});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank and decomposition of tensors of border rank <= 2"};
    app.require_subcommand(1);

    std::string in_path, out_path, params_csv, dec_path, tensor_path;
    std::string kind, shape_text, modes_csv;
    std::uint64_t seed = 0;
    int height = 9;

    CLI::App* c_classify = app.add_subcommand("classify", "stratum, rank and type of a tensor");
    c_classify->add_option("tensor", in_path, "tensor JSON file")->required();

    CLI::App* c_rank = app.add_subcommand("rank", "rank of a tensor");
    c_rank->add_option("tensor", in_path, "tensor JSON file")->required();

    CLI::App* c_dec = app.add_subcommand("decompose", "certified rank decomposition");
    c_dec->add_option("tensor", in_path, "tensor JSON file")->required();
    c_dec->add_option("--params", params_csv,
                      "comma-separated nonzero rationals, one per free tangent mode");
    c_dec->add_option("--out", out_path, "write the decomposition JSON here");

    CLI::App* c_verify = app.add_subcommand("verify", "check a decomposition against a tensor");
    c_verify->add_option("decomposition", dec_path, "decomposition JSON file")->required();
    c_verify->add_option("tensor", tensor_path, "tensor JSON file")->required();

    CLI::App* c_comon = app.add_subcommand("comon", "tensor vs symmetric rank of a polynomial");
    c_comon->add_option("poly", in_path, "polynomial JSON file")->required();

    CLI::App* c_gen = app.add_subcommand("gen", "seeded instance generator");
    c_gen->add_option("--kind", kind, "rank1 | rank2 | tangent")->required();
    c_gen->add_option("--shape", shape_text, "dimensions, e.g. 2x3x4")->required();
    c_gen->add_option("--modes", modes_csv, "tangent mode subset, e.g. 0,1,2");
    c_gen->add_option("--seed", seed, "generator seed");
    c_gen->add_option("--height", height, "bound on numerators/denominators");
    c_gen->add_option("--out", out_path, "write the tensor here (sidecar alongside)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (c_classify->parsed()) return run_classify(in_path, false);
        if (c_rank->parsed()) return run_classify(in_path, true);
        if (c_dec->parsed()) return run_decompose(in_path, params_csv, out_path);
        if (c_verify->parsed()) return run_verify(dec_path, tensor_path);
        if (c_comon->parsed()) return run_comon(in_path);
        if (c_gen->parsed()) return run_gen(kind, shape_text, modes_csv, seed, height, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
