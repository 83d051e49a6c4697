// fairdiv: solve, check, certify, generate, and exhaustively verify
// fair-division instances with exact rational arithmetic.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "fairdiv/errors.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/oracle.hpp"

namespace {

using namespace fairdiv;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitPrecondition = 4;

SearchBudget budget_from_env() {
    SearchBudget budget;
    if (const char* env = std::getenv("FAIRDIV_BUDGET")) {
        char* end = nullptr;
        unsigned long long states = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && states > 0) budget.max_states = states;
        else std::cerr << "warning: ignoring malformed FAIRDIV_BUDGET\n";
    }
    return budget;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_solve(const std::string& instance_path, bool certificates, bool report) {
    Instance inst = instance_from_json(read_json_file(instance_path));
    SolveResult res = solve_eefx(inst, certificates);
    if (report) {
        FairnessReport rep = fairness_report(inst, res.allocation);
        emit(solve_result_to_json(res, &rep));
    } else {
        emit(solve_result_to_json(res, nullptr));
    }
    return kExitHolds;
}

struct NotionRequest {
    std::string name;
    Value alpha{1};
};

std::vector<NotionRequest> parse_notions(const std::string& spec) {
    std::vector<NotionRequest> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? spec.size() + 1 : comma + 1;
        if (tok.empty()) continue;
        NotionRequest req;
        if (tok.rfind("mms:", 0) == 0) {
            auto alpha = parse_value(tok.substr(4));
            if (!alpha) throw ValidationError("malformed mms ratio in --notions: " + tok);
            req.name = "mms";
            req.alpha = *alpha;
        } else if (tok == "efx" || tok == "ef1" || tok == "eefx" || tok == "prop1" ||
                   tok == "propm" || tok == "propx" || tok == "mms") {
            req.name = tok;
        } else {
            throw ValidationError("unknown notion: " + tok);
        }
        out.push_back(std::move(req));
    }
    if (out.empty()) throw ValidationError("--notions requires at least one notion");
    return out;
}

int cmd_check(const std::string& instance_path, const std::string& allocation_path,
              const std::string& notions_spec, const std::string& certificates_path) {
    Instance inst = instance_from_json(read_json_file(instance_path));
    Allocation x = allocation_from_json(read_json_file(allocation_path), inst.agents, inst.items);
    std::vector<NotionRequest> notions = parse_notions(notions_spec);
    SearchBudget budget = budget_from_env();

    std::vector<Allocation> certs;
    if (!certificates_path.empty()) {
        Json doc = read_json_file(certificates_path);
        const Json& arr = doc.is_object() && doc.contains("certificates")
                              ? doc["certificates"] : doc;
        if (!arr.is_array() || static_cast<int>(arr.size()) != inst.agents)
            throw ValidationError("certificate document must hold one witness per agent");
        for (const Json& c : arr)
            certs.push_back(allocation_from_json(
                c.is_object() && c.contains("witness") ? c["witness"] : c,
                inst.agents, inst.items));
    }

    Json result;
    Json per_notion = Json::object();
    bool all_hold = true;
    for (const NotionRequest& req : notions) {
        Json verdict;
        Json agents = Json::array();
        bool holds = true;
        for (int i = 0; i < inst.agents; ++i) {
            bool ok;
            if (req.name == "efx") ok = is_efx_satisfied(inst, x, i);
            else if (req.name == "ef1") ok = is_ef1_satisfied(inst, x, i);
            else if (req.name == "prop1") ok = is_prop1_satisfied(inst, x, i);
            else if (req.name == "propm") ok = is_propm_satisfied(inst, x, i);
            else if (req.name == "propx") ok = is_propx_satisfied(inst, x, i);
            else if (req.name == "mms")
                ok = inst.valuation(i).value(x.bundle(i)) >=
                     req.alpha * mms_value(inst, i).value;
            else if (!certs.empty())
                ok = verify_certificate(inst, x, certs[i], i);
            else
                ok = is_eefx_satisfied_bruteforce(inst, x, i, budget).satisfied;
            agents.push_back(ok);
            holds = holds && ok;
        }
        verdict["holds"] = holds;
        verdict["per_agent"] = std::move(agents);
        if (req.name == "mms") verdict["alpha"] = value_to_json(req.alpha);
        per_notion[req.name] = std::move(verdict);
        all_hold = all_hold && holds;
    }
    result["notions"] = std::move(per_notion);
    result["holds"] = all_hold;
    emit(result);
    return all_hold ? kExitHolds : kExitFails;
}

int cmd_certify(const std::string& instance_path, const std::string& allocation_path,
                int agent_1based, const std::string& method) {
    Instance inst = instance_from_json(read_json_file(instance_path));
    Json alloc_doc = read_json_file(allocation_path);
    Allocation x = allocation_from_json(alloc_doc, inst.agents, inst.items);
    if (agent_1based < 1 || agent_1based > inst.agents)
        throw ValidationError("--agent out of range");
    int agent = agent_1based - 1;

    Certificate cert;
    if (method == "pipeline") {
        auto stage1 = stage1_from_json(alloc_doc, inst.agents, inst.items);
        if (!stage1)
            throw ValidationError("pipeline certification needs a solve document "
                                  "with a \"stage1\" allocation");
        AllocationVector a = allocation_vector(*stage1);
        a.owners.resize(inst.items, 0);
        if (!(pick_by_list(a, inst.valuations) == x))
            throw ValidationError("allocation is not the picking-sequence refinement "
                                  "of the supplied stage-1 allocation");
        cert = inst.kind == Kind::Goods ? eefx_certificate_goods(inst, x, *stage1, agent)
                                        : eefx_certificate_chores(inst, x, *stage1, agent);
    } else if (method == "mms") {
        cert = mms_to_eefx_certificate(inst, x, agent);
    } else {
        throw ValidationError("--method must be pipeline or mms");
    }

    Json j = certificate_to_json(cert);
    j["method"] = method;
    j["verified"] = verify_certificate(inst, x, cert.witness, agent);
    emit(j);
    return kExitHolds;
}

int cmd_gen(const GenOptions& opts) {
    GeneratedInstance gen = generate_instance(opts);
    Json j = instance_to_json(gen.instance);
    j["seed"] = opts.seed;
    if (gen.achieved_alpha) j["alpha"] = value_to_json(*gen.achieved_alpha);
    emit(j);
    return kExitHolds;
}

int cmd_oracle(const std::string& instance_path, const std::string& allocation_path,
               const std::string& question) {
    Instance inst = instance_from_json(read_json_file(instance_path));
    SearchBudget budget = budget_from_env();
    Json j;
    j["question"] = question;

    if (question == "efx-exists") {
        auto found = find_efx_allocation(inst, budget);
        j["holds"] = found.has_value();
        if (found) j["witness"] = allocation_to_json(*found);
        emit(j);
        return found ? kExitHolds : kExitFails;
    }

    if (allocation_path.empty())
        throw ValidationError("questions eefx and eef1 need an allocation file");
    Allocation x = allocation_from_json(read_json_file(allocation_path), inst.agents, inst.items);
    bool holds = true;
    Json agents = Json::array();
    for (int i = 0; i < inst.agents; ++i) {
        EpistemicResult r = question == "eefx"
                                ? is_eefx_satisfied_bruteforce(inst, x, i, budget)
                                : is_eef1_satisfied_bruteforce(inst, x, i, budget);
        Json aj;
        aj["agent"] = i + 1;
        aj["satisfied"] = r.satisfied;
        if (r.witness) aj["witness"] = allocation_to_json(*r.witness);
        agents.push_back(std::move(aj));
        holds = holds && r.satisfied;
    }
    j["holds"] = holds;
    j["per_agent"] = std::move(agents);
    emit(j);
    return holds ? kExitHolds : kExitFails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fair division of indivisible items: EEFX solving, fairness checking, "
                 "certificates, and exhaustive oracles"};
    app.require_subcommand(1);

    std::string instance_path, allocation_path, certificates_path, notions, method = "pipeline";
    std::string question = "eefx";
    bool certificates = true, report = false;
    int agent = 1;
    GenOptions gen_opts;
    std::string gen_kind = "goods";
    std::string gen_alpha;

    auto* solve = app.add_subcommand("solve", "compute an EEFX allocation with certificates");
    solve->add_option("instance", instance_path, "instance JSON file (- for stdin)")->required();
    solve->add_flag("--certificates,!--no-certificates", certificates,
                    "attach per-agent certificates (default on)");
    solve->add_flag("--report", report, "attach a fairness report");

    auto* check = app.add_subcommand("check", "check fairness notions of an allocation");
    check->add_option("instance", instance_path)->required();
    check->add_option("allocation", allocation_path)->required();
    check->add_option("--notions", notions,
                      "comma list of efx,ef1,eefx,prop1,propm,propx,mms:alpha")->required();
    check->add_option("--certificates", certificates_path,
                      "certificate file backing the eefx notion (otherwise brute force)");

    auto* certify = app.add_subcommand("certify", "construct a per-agent certificate");
    certify->add_option("instance", instance_path)->required();
    certify->add_option("allocation", allocation_path,
                        "allocation or solve document (pipeline needs stage1)")->required();
    certify->add_option("--agent", agent, "1-indexed agent")->required();
    certify->add_option("--method", method, "pipeline or mms");

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--agents", gen_opts.agents)->required();
    gen->add_option("--items", gen_opts.items)->required();
    gen->add_option("--kind", gen_kind, "goods or chores");
    gen->add_option("--max-value", gen_opts.max_value);
    gen->add_option("--seed", gen_opts.seed);
    gen->add_flag("--ordered", gen_opts.ordered);
    gen->add_option("--alpha-correlated", gen_alpha, "target correlation in [0,1]");

    auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth queries");
    oracle->add_option("instance", instance_path)->required();
    oracle->add_option("allocation", allocation_path, "needed for eefx/eef1");
    oracle->add_option("--question", question, "eefx, eef1, or efx-exists");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(instance_path, certificates, report);
        if (check->parsed()) return cmd_check(instance_path, allocation_path, notions,
                                              certificates_path);
        if (certify->parsed()) return cmd_certify(instance_path, allocation_path, agent, method);
        if (gen->parsed()) {
            if (gen_kind == "goods") gen_opts.kind = Kind::Goods;
            else if (gen_kind == "chores") gen_opts.kind = Kind::Chores;
            else throw ValidationError("--kind must be goods or chores");
            if (!gen_alpha.empty()) {
                auto a = parse_value(gen_alpha);
                if (!a) throw ValidationError("malformed --alpha-correlated value");
                gen_opts.alpha = *a;
            }
            return cmd_gen(gen_opts);
        }
        if (oracle->parsed()) {
            if (question != "eefx" && question != "eef1" && question != "efx-exists")
                throw ValidationError("--question must be eefx, eef1, or efx-exists");
            return cmd_oracle(instance_path, allocation_path, question);
        }
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return kExitInput;
}
