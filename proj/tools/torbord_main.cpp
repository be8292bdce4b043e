// torbord: exact invariants of the canonical toric manifolds attached to
// abstract simplicial complexes, and their bordism classification.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "torbord/bier.hpp"
#include "torbord/bordism.hpp"
#include "torbord/charnum.hpp"
#include "torbord/enumerate.hpp"
#include "torbord/io.hpp"
#include "torbord/oracle.hpp"
#include "torbord/vectors.hpp"

namespace {

using namespace torbord;

int exit_code_for(const error& e) {
    switch (e.code()) {
        case errc::m_too_small:
        case errc::full_simplex:
        case errc::vertex_range:
        case errc::not_a_face:
        case errc::parse:
        case errc::degree:
        case errc::dimension:
            return 2;
        case errc::range:
            return 3;
        default:
            return 1; // internal consistency traps
    }
}

std::vector<Partition> selected_partitions(int weight, const std::string& partition, bool all) {
    if (all || partition.empty()) return partitions(weight);
    return {Partition::parse(partition)};
}

void print_kv(const std::string& key, const Json& value, bool as_json) {
    if (as_json) {
        Json j;
        j[key] = value;
        std::cout << j.dump() << '\n';
    } else if (value.is_string()) {
        std::cout << key << ": " << value.get<std::string>() << '\n';
    } else {
        std::cout << key << ": " << value.dump() << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical toric manifold invariants over exact arithmetic"};
    app.require_subcommand(1);

    std::string file, file2, partition, out_path, check_list = "chern,milnor,pontryagin,sw";
    bool as_json = false, all_parts = false, real_flag = false, complex_flag = false,
         oriented_flag = false;
    int opt_m = 0, opt_n = 2, sample_count = 200, sharp_n = 0;
    std::uint64_t seed = 1;
    std::string find_mode = "bordant-pairs";

    auto add_file = [&](CLI::App* cmd) { cmd->add_option("file", file, "complex file")->required(); };
    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "machine-readable output"); };
    auto add_parts = [&](CLI::App* cmd) {
        cmd->add_option("--partition", partition, "partition, e.g. 1,1,2");
        cmd->add_flag("--all", all_parts, "every partition of the relevant weight");
    };

    auto* cmd_analyze = app.add_subcommand("analyze", "full invariant report");
    add_file(cmd_analyze);
    add_json(cmd_analyze);

    auto* cmd_chern = app.add_subcommand("chern", "Chern numbers c_I[X_K]");
    add_file(cmd_chern);
    add_parts(cmd_chern);
    add_json(cmd_chern);

    auto* cmd_milnor = app.add_subcommand("milnor", "Milnor number s_{m-1}[X_K]");
    add_file(cmd_milnor);
    add_json(cmd_milnor);

    auto* cmd_pont = app.add_subcommand("pontryagin", "Pontryagin numbers (odd m)");
    add_file(cmd_pont);
    add_parts(cmd_pont);
    add_json(cmd_pont);

    auto* cmd_sw = app.add_subcommand("sw", "Stiefel-Whitney numbers");
    add_file(cmd_sw);
    add_parts(cmd_sw);
    cmd_sw->add_flag("--real", real_flag, "real manifold X_K^R only");
    cmd_sw->add_flag("--complex", complex_flag, "complex manifold X_K only");
    add_json(cmd_sw);

    auto* cmd_chiy = app.add_subcommand("chi-y", "chi_y-genus coefficients");
    add_file(cmd_chiy);
    add_json(cmd_chiy);

    auto* cmd_sign = app.add_subcommand("signature", "signature of X_K");
    add_file(cmd_sign);
    add_json(cmd_sign);

    auto* cmd_gamma = app.add_subcommand("gamma", "universal gamma-vectors");
    cmd_gamma->add_option("--m", opt_m, "ambient vertex count")->required();
    add_parts(cmd_gamma);
    add_json(cmd_gamma);

    auto* cmd_todd = app.add_subcommand("todd", "Todd coefficients tau_I");
    cmd_todd->add_option("--n", opt_n, "degree")->required();
    add_json(cmd_todd);

    auto* cmd_dual = app.add_subcommand("dual", "Alexander dual complex");
    add_file(cmd_dual);
    add_json(cmd_dual);

    auto* cmd_bier = app.add_subcommand("bier", "Bier sphere of the complex");
    add_file(cmd_bier);

    auto* cmd_fan = app.add_subcommand("fan", "canonical fan operations");
    auto* cmd_fan_check = cmd_fan->add_subcommand("check", "verify facet cone unimodularity");
    add_file(cmd_fan_check);

    auto* cmd_bord = app.add_subcommand("bordism", "bordism classification");
    auto* cmd_bord_cmp = cmd_bord->add_subcommand("compare", "unitary bordism equality");
    cmd_bord_cmp->add_option("file1", file, "first complex")->required();
    cmd_bord_cmp->add_option("file2", file2, "second complex")->required();
    auto* cmd_bord_dec = cmd_bord->add_subcommand("decompose", "class over the X_j basis");
    add_file(cmd_bord_dec);
    add_json(cmd_bord_dec);
    auto* cmd_bord_gen = cmd_bord->add_subcommand("generator", "polynomial generator test");
    add_file(cmd_bord_gen);
    add_json(cmd_bord_gen);
    auto* cmd_bord_null = cmd_bord->add_subcommand("null", "null-bordism flags");
    add_file(cmd_bord_null);
    cmd_bord_null->add_flag("--real", real_flag, "real manifold");
    cmd_bord_null->add_flag("--oriented", oriented_flag, "oriented bordism");
    add_json(cmd_bord_null);

    auto* cmd_imm = app.add_subcommand("immersion", "immersion dimension bounds");
    cmd_imm->add_option("file", file, "complex file");
    cmd_imm->add_option("--sharp", sharp_n, "sharp family for total dimension n");
    add_json(cmd_imm);

    auto* cmd_oracle = app.add_subcommand("oracle", "verify closed forms against the cohomology pairing");
    add_file(cmd_oracle);
    cmd_oracle->add_option("--check", check_list, "comma list: chern,milnor,pontryagin,sw");

    auto* cmd_enum = app.add_subcommand("enumerate", "batch classification to JSONL");
    cmd_enum->add_option("--m", opt_m, "ambient vertex count")->required();
    cmd_enum->add_option("--find", find_mode, "bordant-pairs | generators");
    cmd_enum->add_option("--out", out_path, "output path")->required();
    cmd_enum->add_option("--seed", seed, "sampling seed (m = 6, 7)");
    cmd_enum->add_option("--sample", sample_count, "sample size (m = 6, 7)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_analyze) {
            const auto k = load_complex_file(file);
            std::cout << analyze_report(k).dump(as_json ? -1 : 2) << '\n';
        } else if (*cmd_chern) {
            const auto k = load_complex_file(file);
            for (const auto& I : selected_partitions(k.m() - 1, partition, all_parts))
                print_kv("c_{" + I.to_string() + "}", int_to_json(chern_number(k, I)), as_json);
        } else if (*cmd_milnor) {
            const auto k = load_complex_file(file);
            print_kv("s_{m-1}", int_to_json(milnor_number(k)), as_json);
        } else if (*cmd_pont) {
            const auto k = load_complex_file(file);
            for (const auto& I : selected_partitions((k.m() - 1) / 2, partition, all_parts))
                print_kv("p_{" + I.to_string() + "}", int_to_json(pontryagin_number(k, I)), as_json);
        } else if (*cmd_sw) {
            const auto k = load_complex_file(file);
            const bool both = real_flag == complex_flag;
            for (const auto& I : selected_partitions(k.m() - 1, partition, all_parts)) {
                if (real_flag || both)
                    print_kv("w_{" + I.to_string() + "}[X^R]", sw_number_real(k, I), as_json);
                if (complex_flag || both)
                    print_kv("w_{" + I.to_string() + "}[X]", sw_number_complex(k, I), as_json);
            }
        } else if (*cmd_chiy) {
            const auto k = load_complex_file(file);
            const auto cy = chi_y(k);
            print_kv("chi_y", int_vector_to_json(cy.coeffs), as_json);
            print_kv("euler_x", int_to_json(cy.at_minus_one()), as_json);
            print_kv("todd", int_to_json(cy.at_zero()), as_json);
            print_kv("signature", int_to_json(cy.at_plus_one()), as_json);
        } else if (*cmd_sign) {
            const auto k = load_complex_file(file);
            print_kv("signature", int_to_json(signature(k)), as_json);
        } else if (*cmd_gamma) {
            for (const auto& I : selected_partitions(opt_m - 1, partition, all_parts)) {
                const auto g = gamma_vector(opt_m, I);
                if (as_json) {
                    Json j;
                    j["partition"] = I.to_string();
                    j["gamma"] = int_vector_to_json(g);
                    Json pc = Json::array();
                    for (int jj = 0; jj < opt_m; ++jj) pc.push_back(int_to_json(product_chern(opt_m, jj, I)));
                    j["product_chern"] = pc;
                    std::cout << j.dump() << '\n';
                } else {
                    std::cout << "gamma_{" << I.to_string() << "} =";
                    for (const auto& v : g) std::cout << ' ' << v;
                    std::cout << "\n  product c_I =";
                    bool mod2_ok = true;
                    for (int jj = 0; jj < opt_m; ++jj) {
                        const Int pc = product_chern(opt_m, jj, I);
                        std::cout << ' ' << pc;
                        if ((pc - g[jj]) % 2 != 0) mod2_ok = false;
                    }
                    std::cout << (mod2_ok ? "   [agrees mod 2]" : "   [MOD-2 MISMATCH]") << '\n';
                }
            }
        } else if (*cmd_todd) {
            for (const auto& [I, t] : todd_coefficients(opt_n))
                print_kv("tau_{" + I.to_string() + "}", rat_to_json(t), as_json);
        } else if (*cmd_dual) {
            const auto k = load_complex_file(file);
            std::cout << complex_to_json(k.alexander_dual()).dump() << '\n';
        } else if (*cmd_bier) {
            const auto k = load_complex_file(file);
            std::cout << complex_to_json(bier_sphere(k).complex).dump() << '\n';
        } else if (*cmd_fan_check) {
            const auto k = load_complex_file(file);
            try {
                facet_cones_unimodular(k);
            } catch (const error& e) {
                if (e.code() == errc::nonregular) {
                    std::cerr << e.what() << '\n';
                    return 1;
                }
                throw;
            }
            std::cout << "all facet cones unimodular\n";
        } else if (*cmd_bord_cmp) {
            const auto k1 = load_complex_file(file);
            const auto k2 = load_complex_file(file2);
            const bool eq = bordant_unitary(k1, k2);
            std::cout << (eq ? "bordant" : "not bordant") << '\n';
        } else if (*cmd_bord_dec) {
            const auto k = load_complex_file(file);
            const auto cls = decompose(k);
            Json reduced = Json::object();
            for (const auto& [b, v] : cls.reduced) reduced[std::to_string(b)] = int_to_json(v);
            print_kv("raw", int_vector_to_json(cls.raw), as_json);
            print_kv("reduced", reduced, as_json);
        } else if (*cmd_bord_gen) {
            const auto k = load_complex_file(file);
            const auto cert = is_polynomial_generator(k);
            print_kv("generator", cert.generator, as_json);
            print_kv("milnor", int_to_json(cert.milnor), as_json);
            print_kv("milnor_bound", int_to_json(cert.bound), as_json);
            print_kv("condition", cert.condition, as_json);
        } else if (*cmd_bord_null) {
            const auto k = load_complex_file(file);
            const bool both = real_flag == oriented_flag;
            if (real_flag || both)
                print_kv("null_bordant_real", null_bordant_real(k), as_json);
            if (oriented_flag || both) {
                print_kv("null_bordant_oriented", null_bordant_oriented(k), as_json);
                print_kv("oriented_class", int_to_json(oriented_class_coefficient(k)), as_json);
            }
        } else if (*cmd_imm) {
            if (sharp_n > 0) {
                const auto fam = sharp_immersion_family(sharp_n);
                print_kv("bound", fam.bound, as_json);
                for (const auto& factor : fam.factors)
                    print_kv("factor", complex_to_json(factor), as_json);
            } else {
                if (file.empty()) {
                    std::cerr << "immersion: need a complex file or --sharp N\n";
                    return 2;
                }
                const auto k = load_complex_file(file);
                const auto b = immersion_bounds(k);
                print_kv("k_max", b.k_max, as_json);
                print_kv("n_real_min", b.n_real_min, as_json);
                print_kv("n_complex_min", b.n_complex_min, as_json);
            }
        } else if (*cmd_oracle) {
            const auto k = load_complex_file(file);
            const auto report = verify(k);
            // --check narrows which families are reported
            std::vector<std::string> shown;
            for (const auto& line : report.mismatches) {
                const bool chern = line.rfind("c_", 0) == 0, milnor = line.rfind("s_", 0) == 0,
                           pont = line.rfind("p_", 0) == 0, sw = line.rfind("w_", 0) == 0;
                if ((chern && check_list.find("chern") != std::string::npos) ||
                    (milnor && check_list.find("milnor") != std::string::npos) ||
                    (pont && check_list.find("pontryagin") != std::string::npos) ||
                    (sw && check_list.find("sw") != std::string::npos))
                    shown.push_back(line);
            }
            for (const auto& line : shown) std::cout << line << '\n';
            if (!shown.empty()) return 1;
            std::cout << "oracle agrees with every closed form\n";
        } else if (*cmd_enum) {
            EnumerateFind mode;
            if (find_mode == "bordant-pairs")
                mode = EnumerateFind::bordant_pairs;
            else if (find_mode == "generators")
                mode = EnumerateFind::generators;
            else {
                std::cerr << "enumerate: unknown --find mode '" << find_mode << "'\n";
                return 2;
            }
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot open " << out_path << " for writing\n";
                return 2;
            }
            run_enumerate(opt_m, mode, out, seed, sample_count);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
