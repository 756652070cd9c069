#include "cliffga/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cliffga/group_algebra.hpp"
#include "cliffga/multivector.hpp"
#include "cliffga/report.hpp"
#include "cliffga/spinor.hpp"
#include "cliffga/vee_group.hpp"

namespace cliffga {

namespace {

Json signature_json(const Signature& sig) {
    Json j;
    j["p"] = sig.p;
    j["q"] = sig.q;
    if (sig.r > 0) j["r"] = sig.r;
    return j;
}

std::string sig_display(const Signature& sig) {
    return "G(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ")";
}

Json classify_json(const Signature& sig) {
    VeeClass cls = classify(sig);
    Table1Row row = table1_row(cls);
    Json j;
    j["signature"] = signature_json(sig);
    j["class"] = cls.name;
    j["k"] = cls.k;
    j["center"] = row.center;
    j["group_order"] = row.group_order;
    j["algebra_dim"] = row.algebra_dim;
    return j;
}

int emit_report(const Report& rep, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << rep.to_json().dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks)
            out << (c.pass ? "PASS" : "FAIL") << " " << c.name << "\n";
        out << (rep.pass() ? "PASS" : "FAIL") << " " << rep.verifier << "\n";
    }
    return rep.pass() ? 0 : 1;
}

// One line per family, entries by ascending subscript, canonical
// signature (largest p) first within a class.
std::string table2_text(const std::vector<Table2Entry>& entries) {
    auto family_rank = [](VeeFamily f) {
        switch (f) {
            case VeeFamily::N_even: return 0;
            case VeeFamily::N_odd: return 1;
            case VeeFamily::Omega_even: return 2;
            case VeeFamily::Omega_odd: return 3;
            case VeeFamily::S: return 4;
        }
        return 5;
    };
    static const char* row_label[5] = {"N_{2k}", "N_{2k-1}", "Ω_{2k}", "Ω_{2k-1}",
                                       "S_k"};
    std::vector<std::vector<const Table2Entry*>> rows(5);
    for (const auto& e : entries) rows[family_rank(e.cls.family)].push_back(&e);
    for (auto& row : rows)
        std::sort(row.begin(), row.end(), [](const Table2Entry* a, const Table2Entry* b) {
            return a->cls.k != b->cls.k ? a->cls.k < b->cls.k
                                        : a->sig.p > b->sig.p;
        });
    std::ostringstream os;
    for (int r = 0; r < 5; ++r) {
        os << row_label[r] << ":";
        for (const Table2Entry* e : rows[r])
            os << " " << e->cls.name << "=" << sig_display(e->sig);
        os << "\n";
    }
    return os.str();
}

Signature make_signature(int p, int q, int r) {
    try {
        return Signature(p, q, r);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(e.what());
    }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Clifford algebras Cl(p,q,r), Salingaros vee groups and their group algebras"};
    app.name("cliffga");
    app.require_subcommand(1);

    int p = 0, q = 0, r = 0;
    std::string format = "text";
    bool unsafe_max = false;

    auto add_signature_flags = [&](CLI::App* cmd, bool with_r) {
        cmd->add_option("-p", p, "count of generators squaring to +1")->capture_default_str();
        cmd->add_option("-q", q, "count of generators squaring to -1")->capture_default_str();
        if (with_r)
            cmd->add_option("-r", r, "count of generators squaring to 0")->capture_default_str();
    };
    auto add_format = [&](CLI::App* cmd, const std::vector<std::string>& choices) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(choices))
            ->capture_default_str();
    };

    // mul
    std::string lhs_text, rhs_text;
    CLI::App* mul = app.add_subcommand("mul", "multiply two multivectors");
    add_signature_flags(mul, true);
    add_format(mul, {"text", "json"});
    mul->add_option("lhs", lhs_text, "left factor")->required();
    mul->add_option("rhs", rhs_text, "right factor")->required();

    // classify
    CLI::App* cls_cmd = app.add_subcommand("classify", "Salingaros class of G_{p,q}");
    add_signature_flags(cls_cmd, false);
    add_format(cls_cmd, {"text", "json"});
    cls_cmd->add_flag("--unsafe-max", unsafe_max, "lift the desk-scale caps");

    // tables
    int table_no = 2;
    long long max_order = 256;
    CLI::App* tables_cmd = app.add_subcommand("tables", "reproduce the survey tables");
    tables_cmd->add_option("--table", table_no, "which table (1 or 2)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    tables_cmd->add_option("--max-order", max_order, "largest group order for table 2")
        ->capture_default_str();
    add_format(tables_cmd, {"text", "csv", "json"});
    tables_cmd->add_flag("--unsafe-max", unsafe_max, "lift the desk-scale caps");

    // idempotents
    CLI::App* idem_cmd = app.add_subcommand("idempotents", "canonical primitive idempotent data");
    add_signature_flags(idem_cmd, false);
    add_format(idem_cmd, {"text", "json"});
    idem_cmd->add_flag("--unsafe-max", unsafe_max, "lift the desk-scale caps");

    // verify
    std::string which;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a theorem verifier");
    verify_cmd
        ->add_option("which", which, "chernov | main-theorem | salingaros | structure | passman")
        ->required()
        ->check(CLI::IsMember({"chernov", "main-theorem", "salingaros", "structure", "passman"}));
    add_signature_flags(verify_cmd, false);
    add_format(verify_cmd, {"text", "json"});
    verify_cmd->add_flag("--unsafe-max", unsafe_max, "lift the desk-scale caps");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (mul->parsed()) {
            Signature sig = make_signature(p, q, r);
            Multivector product =
                mv_mul(parse_mv(sig, lhs_text), parse_mv(sig, rhs_text));
            if (format == "json") {
                Json j;
                j["signature"] = signature_json(sig);
                j["product"] = format_mv(product);
                out << j.dump(2) << "\n";
            } else {
                out << format_mv(product) << "\n";
            }
            return 0;
        }

        const int cap = unsafe_max ? kMaxEnumDim : kMaxVeeDim;

        if (cls_cmd->parsed()) {
            Signature sig = make_signature(p, q, 0);
            if (format == "json") {
                out << classify_json(sig).dump(2) << "\n";
            } else {
                VeeClass cls = classify(sig, true, cap);
                Table1Row row = table1_row(cls);
                out << sig_display(sig) << ": class " << cls.name << ", k " << cls.k
                    << ", center " << row.center << ", group order " << row.group_order
                    << ", algebra dim " << row.algebra_dim << "\n";
            }
            return 0;
        }

        if (tables_cmd->parsed()) {
            if (table_no == 1) {
                std::vector<Table1SymbolicRow> rows = table1();
                if (format == "json") {
                    Json j = Json::array();
                    for (const auto& row : rows)
                        j.push_back({{"class", row.cls},
                                     {"center", row.center},
                                     {"group_order", row.group_order},
                                     {"algebra_dim", row.algebra_dim}});
                    out << j.dump(2) << "\n";
                } else if (format == "csv") {
                    out << "class,center,group_order,algebra_dim\n";
                    for (const auto& row : rows)
                        out << row.cls << "," << row.center << "," << row.group_order << ","
                            << row.algebra_dim << "\n";
                } else {
                    for (const auto& row : rows)
                        out << row.cls << "  center " << row.center << "  group order "
                            << row.group_order << "  dim Cl " << row.algebra_dim << "\n";
                }
            } else {
                std::vector<Table2Entry> entries = table2(max_order, true, cap);
                if (format == "json") {
                    Json j = Json::array();
                    for (const auto& e : entries) {
                        Json item;
                        item["signature"] = signature_json(e.sig);
                        item["class"] = e.cls.name;
                        item["k"] = e.cls.k;
                        item["center"] = center_type_name(e.center);
                        item["group_order"] = e.group_order;
                        item["algebra_dim"] = e.algebra_dim;
                        j.push_back(std::move(item));
                    }
                    out << j.dump(2) << "\n";
                } else if (format == "csv") {
                    out << "p,q,class,k,center,group_order,algebra_dim\n";
                    for (const auto& e : entries)
                        out << e.sig.p << "," << e.sig.q << "," << e.cls.name << "," << e.cls.k
                            << "," << center_type_name(e.center) << "," << e.group_order << ","
                            << e.algebra_dim << "\n";
                } else {
                    out << table2_text(entries);
                }
            }
            return 0;
        }

        if (idem_cmd->parsed()) {
            Signature sig = make_signature(p, q, 0);
            if (sig.n() > cap)
                throw CLI::ValidationError("p+q exceeds the cap; use --unsafe-max");
            SpinorStructure s = spinor_structure(sig);
            if (format == "json") {
                Json j;
                j["signature"] = signature_json(sig);
                j["k"] = static_cast<int>(s.spec.monomials.size());
                j["f"] = format_mv(s.f);
                Json monomials = Json::array();
                for (std::uint64_t m : s.spec.monomials)
                    monomials.push_back(blade_name(BladeIndex(m, sig.n())));
                j["monomials"] = std::move(monomials);
                Json set = Json::array();
                for (const auto& e : s.idempotents) set.push_back(format_mv(e));
                j["complete_set"] = std::move(set);
                j["orbit_size"] = s.orbit.orbit.size();
                j["stabilizer_order"] = s.orbit.stabilizer.size();
                j["T_order"] = s.t_group.size();
                j["K_order"] = s.k_group.size();
                j["dim_K"] = s.field.basis.size();
                Json sb = Json::array();
                for (std::uint64_t m : s.s_basis) {
                    std::string name = blade_name(BladeIndex(m, sig.n()));
                    sb.push_back(name.empty() ? "1" : name);
                }
                j["spinor_basis"] = std::move(sb);
                out << j.dump(2) << "\n";
            } else {
                out << "f = " << format_mv(s.f) << "\n";
                out << "complete set (" << s.idempotents.size() << "):\n";
                for (const auto& e : s.idempotents) out << "  " << format_mv(e) << "\n";
                out << "orbit size " << s.orbit.orbit.size() << ", stabilizer order "
                    << s.orbit.stabilizer.size() << "\n";
                out << "|T| = " << s.t_group.size() << ", |K| = " << s.k_group.size()
                    << ", dim K = " << s.field.basis.size() << "\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            Signature sig = make_signature(p, q, 0);
            Report rep;
            if (which == "chernov") {
                rep = verify_chernov(sig, unsafe_max ? kMaxEnumDim : 6);
            } else if (which == "main-theorem") {
                rep = verify_main_theorem(sig, unsafe_max ? kMaxVeeDim : 5);
            } else if (which == "structure") {
                rep = verify_structure(sig, 4, unsafe_max ? kMaxVeeDim : 6);
            } else if (which == "passman") {
                rep = verify_passman(sig, unsafe_max ? kMaxEnumDim : 5);
            } else {  // salingaros
                rep.verifier = "salingaros";
                rep.context = signature_json(sig);
                VeeGroup v = vee_group(sig, cap);
                VeeClass cls = classify(sig, false, cap);
                FiniteGroup built = salingaros_build(cls);
                Table1Row row = table1_row(cls);
                rep.checks.push_back({"class-assignment", true, {{"class", cls.name}}});
                rep.checks.push_back({"table1-group-order",
                                      row.group_order == v.group.size(),
                                      {{"order", v.group.size()}}});
                rep.checks.push_back(
                    {"table1-algebra-dim", row.algebra_dim == (1LL << sig.n()), {}});
                rep.checks.push_back({"build-order", built.size() == v.group.size(), {}});
                rep.checks.push_back(
                    {"isomorphic-to-central-product", is_isomorphic(v.group, built), {}});
            }
            return emit_report(rep, format, out);
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        // Caps and other refusals to start are usage errors.
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace cliffga
