#include <lpack/errors.hpp>
#include <lpack/harness.hpp>

#include <chrono>

namespace lpack
{
    auto one_factor_edge_table_4x4() -> const std::vector<std::uint16_t> &
    {
        static const std::vector<std::uint16_t> table = [] {
            std::vector<std::uint16_t> mats(1u << 16), out(1u << 16);
            for (std::uint32_t m = 0 ; m < mats.size() ; ++m)
                mats[m] = static_cast<std::uint16_t>(m);
            kernels::one_factor_edges_4x4(mats, out);
            return out;
        }();
        return table;
    }

    auto bigraph_from_4x4(std::uint16_t bits) -> Bigraph
    {
        std::vector<Row> rows(4);
        for (int i = 0 ; i < 4 ; ++i)
            rows[i] = Row((bits >> (4 * i)) & 0xf);
        return Bigraph{4, std::move(rows)};
    }

    namespace
    {
        auto variant_key(const LemmaSpec & spec, int variant) -> std::string
        {
            return spec.variants.empty() ? "all" : std::to_string(variant);
        }
    }

    auto verify(const LemmaSpec & spec, const Strategy & strategy) -> VerifierReport
    {
        auto start = std::chrono::steady_clock::now();
        VerifierReport report;
        report.lemma = spec.name;
        report.seed = strategy.seed;

        auto check = [&] (const std::optional<StructuredInstance> & inst, const std::string & key) {
            if (! inst || ! spec.precondition(*inst)) {
                ++report.vacuous;
                return;
            }
            ++report.instances_checked;
            ++report.per_variant[key];
            if (spec.observe)
                spec.observe(*inst, report.notes);
            if (! spec.property(*inst) && report.counterexamples.size() < max_reported_counterexamples)
                report.counterexamples.push_back(shrink(spec, *inst));
        };

        if (strategy.kind == Strategy::Kind::exhaustive) {
            if (! spec.enumerate)
                throw InputError{spec.name + " has no exhaustive enumeration"};
            report.strategy = "exhaustive";
            report.trials = spec.exhaustive_count;
            for (std::uint64_t i = 0 ; i < spec.exhaustive_count ; ++i)
                check(spec.enumerate(i), "all");
        }
        else {
            if (! spec.sample)
                throw InputError{spec.name + " has no randomized sampler"};
            report.strategy = "randomized";
            report.trials = strategy.trials;
            for (std::uint64_t i = 0 ; i < strategy.trials ; ++i) {
                int variant = spec.variants.empty() ? 0 : spec.variants[i % spec.variants.size()];
                Rng rng = trial_rng(strategy.seed, i);
                check(spec.sample(rng, variant), variant_key(spec, variant));
            }
        }

        report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    auto verify(const std::string & name, const Strategy & strategy) -> VerifierReport
    {
        return verify(lemma_spec(name), strategy);
    }

    auto shrink(const LemmaSpec & spec, StructuredInstance inst) -> StructuredInstance
    {
        auto fails = [&] (const StructuredInstance & c) { return spec.precondition(c) && ! spec.property(c); };
        auto target = [] (StructuredInstance & c) -> Bigraph & { return c.modified ? *c.modified : c.h; };
        if (! fails(inst))
            return inst;

        // drop edges one at a time while the instance still fails
        auto remove_greedily = [&] (StructuredInstance & c) {
            int s = target(c).side();
            for (int i = 0 ; i < s ; ++i)
                for (int j = 0 ; j < s ; ++j) {
                    if (! target(c).has_edge(i, j))
                        continue;
                    StructuredInstance candidate = c;
                    target(candidate).remove_edge(i, j);
                    if (fails(candidate))
                        c = std::move(candidate);
                }
        };

        remove_greedily(inst);
        // an added edge is kept only if it lets the removals end strictly smaller, so this terminates
        bool changed = true;
        while (changed) {
            changed = false;
            int s = target(inst).side(), edges = target(inst).edge_count();
            for (int i = 0 ; i < s && ! changed ; ++i)
                for (int j = 0 ; j < s && ! changed ; ++j) {
                    if (target(inst).has_edge(i, j))
                        continue;
                    StructuredInstance candidate = inst;
                    target(candidate).add_edge(i, j);
                    if (! fails(candidate))
                        continue;
                    remove_greedily(candidate);
                    if (target(candidate).edge_count() < edges) {
                        inst = std::move(candidate);
                        changed = true;
                    }
                }
        }
        return inst;
    }
}
