#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "baire/baire.hpp"

namespace {

using baire::Json;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return Json::parse(buf.str());
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

Json value_hits_json(const baire::UpWord& word, const std::vector<std::uint64_t>& hits) {
    Json arr = Json::array();
    for (std::uint64_t n : hits)
        arr.push_back(Json{{"n", n}, {"value", baire::tail_sum(word, n).str()}});
    return arr;
}

int cmd_nwd(const std::string& automaton_path) {
    baire::SafetyAutomaton a = baire::automaton_from_json(load_json(automaton_path));
    baire::NwdCertificate cert = baire::is_nowhere_dense(a);
    if (cert.nowhere_dense) {
        emit(Json{{"verdict", "nowhere_dense"}});
        return 0;
    }
    emit(Json{{"verdict", "has_interior"}, {"witness", baire::word_json(*cert.witness)}});
    return 1;
}

int cmd_defeat(const std::string& presentation_path, std::uint64_t horizon) {
    baire::MeagerPresentation p =
        baire::normalize_presentation(baire::layers_from_json(load_json(presentation_path)));
    emit(baire::schedule_json(baire::build_defeating_challenge(p, horizon)));
    return 0;
}

int cmd_witness(const std::string& schedule_path, const std::string& constraint_path,
                baire::Symbol pad) {
    baire::ChallengeSchedule f = baire::schedule_from_json(load_json(schedule_path));
    baire::ConstraintSet c = baire::constraint_from_json(load_json(constraint_path));
    baire::BaireWitness w = baire::baire_witness(f, c, pad);
    Json out = baire::upword_json(w.word);
    out["hits"] = Json(w.hits.indices);
    out["certificate"] = baire::hit_certificate_json(w.hits.symbolic_tail);
    out["consumed"] = Json(w.consumed);
    emit(out);
    return 0;
}

int cmd_verify(const std::string& presentation_path, const std::string& schedule_path,
               const std::string& word_path, std::uint64_t horizon) {
    baire::MeagerPresentation p =
        baire::normalize_presentation(baire::layers_from_json(load_json(presentation_path)));
    baire::ChallengeSchedule f = baire::schedule_from_json(load_json(schedule_path));
    baire::UpWord w = baire::upword_from_json(load_json(word_path));
    baire::DefeatReport report = baire::verify_defeat(p, f, w, horizon);
    emit(baire::defeat_report_json(report));
    return report.pass ? 0 : 1;
}

int cmd_tailsum(const std::string& word_path, const std::string& u_path,
                std::uint64_t horizon) {
    baire::UpWord g = baire::upword_from_json(load_json(word_path));
    baire::OpenSet1D u = baire::openset_from_json(load_json(u_path));
    baire::HitsReport report = baire::hits_in_U(g, u, horizon);
    emit(Json{{"hits", value_hits_json(g, report.hits)},
              {"infinitely_often", report.infinitely_often}});
    return 0;
}

int cmd_corollary(const std::string& u_path, std::uint64_t start, std::uint64_t period,
                  std::uint64_t depth) {
    baire::OpenSet1D u = baire::openset_from_json(load_json(u_path));
    baire::CorollaryTranscript t =
        baire::corollary_demo(u, baire::PeriodicTail{start, period}, depth);
    Json out = baire::upword_json(t.word);
    out["schedule"] = baire::schedule_json(t.schedule);
    out["certificate"] = baire::window_certificate_json(t.certificate);
    out["hits"] = value_hits_json(t.word, t.report.hits);
    out["infinitely_often"] = t.report.infinitely_often;
    out["horizon"] = t.horizon;
    emit(out);
    return 0;
}

int cmd_remark2(const std::string& schedule_path, const std::string& psi_name) {
    baire::ChallengeSchedule f = baire::schedule_from_json(load_json(schedule_path));
    baire::PsiFunction psi = psi_name == "identity" ? baire::PsiFunction::identity()
                                                    : baire::PsiFunction::doubling();
    baire::UpWord w = baire::remark2_responder(f, psi);
    std::uint64_t horizon =
        f.entries().empty() ? 0 : f.entries().rbegin()->first;
    baire::HitSet hits = baire::hit_set(w, f, horizon);
    std::uint64_t check_len = w.prefix_size() + 2 * w.period_size();
    std::vector<baire::Symbol> head;
    for (std::uint64_t n = 0; n < check_len; ++n) head.push_back(w.at(n));
    bool consistent = baire::remark2_membership(baire::FiniteWord(w.alphabet(), head),
                                                psi) == baire::Remark2Verdict::consistent;
    Json out = baire::upword_json(w);
    out["consistent"] = consistent;
    out["hits"] = Json(hits.indices);
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Baire category toolkit over omega-words"};
    app.require_subcommand(1);

    std::string automaton_path;
    std::string presentation_path;
    std::string schedule_path;
    std::string constraint_path;
    std::string word_path;
    std::string u_path;
    std::string psi_name = "identity";
    std::uint64_t horizon = 16;
    std::uint64_t tail_horizon = 64;
    std::uint64_t start = 0;
    std::uint64_t period = 1;
    std::uint64_t depth = 8;
    baire::Symbol pad = 0;

    CLI::App* nwd = app.add_subcommand("nwd", "decide nowhere-density of a closed set");
    nwd->add_option("automaton", automaton_path, "safety automaton file")->required();

    CLI::App* defeat =
        app.add_subcommand("defeat", "build the challenge defeating a meager presentation");
    defeat->add_option("presentation", presentation_path, "presentation file")->required();
    defeat->add_option("--horizon", horizon, "largest challenge index");

    CLI::App* witness =
        app.add_subcommand("witness", "build a word hitting the schedule inside a constraint");
    witness->add_option("schedule", schedule_path, "challenge schedule file")->required();
    witness->add_option("constraint", constraint_path, "constraint set file")->required();
    witness->add_option("--pad", pad, "filler symbol");

    CLI::App* verify =
        app.add_subcommand("verify", "check a word against a defeating challenge");
    verify->add_option("presentation", presentation_path, "presentation file")->required();
    verify->add_option("schedule", schedule_path, "challenge schedule file")->required();
    verify->add_option("word", word_path, "ultimately periodic word file")->required();
    verify->add_option("--horizon", horizon, "hit enumeration bound");

    CLI::App* tailsum = app.add_subcommand("tailsum", "tail sums of a binary word landing in U");
    tailsum->add_option("word", word_path, "binary word file")->required();
    tailsum->add_option("U", u_path, "open set file")->required();
    tailsum->add_option("--horizon", tail_horizon, "largest index checked");

    CLI::App* corollary =
        app.add_subcommand("corollary", "synthesize a word whose tail sums enter U forever");
    corollary->add_option("U", u_path, "open set file")->required();
    corollary->add_option("--start", start, "first scheduled index")->required();
    corollary->add_option("--period", period, "schedule tail period");
    corollary->add_option("--depth", depth, "window search depth");

    CLI::App* remark2 =
        app.add_subcommand("remark2", "respond to challenges from inside the block-grammar set");
    remark2->add_option("schedule", schedule_path, "finite schedule over the naturals")->required();
    remark2->add_option("--psi", psi_name, "filler-length rule")
        ->check(CLI::IsMember({"identity", "double"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(nwd)) return cmd_nwd(automaton_path);
        if (app.got_subcommand(defeat)) return cmd_defeat(presentation_path, horizon);
        if (app.got_subcommand(witness)) return cmd_witness(schedule_path, constraint_path, pad);
        if (app.got_subcommand(verify))
            return cmd_verify(presentation_path, schedule_path, word_path, horizon);
        if (app.got_subcommand(tailsum)) return cmd_tailsum(word_path, u_path, tail_horizon);
        if (app.got_subcommand(corollary)) return cmd_corollary(u_path, start, period, depth);
        if (app.got_subcommand(remark2)) return cmd_remark2(schedule_path, psi_name);
    } catch (const baire::NoWindow& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return 2;
}
