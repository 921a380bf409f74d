#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "eggers/newton.hpp"
#include "eggers/randgerm.hpp"

namespace eggers {

using Json = nlohmann::json;

/// Requested parameter placement from an input document.
struct LambdaSpec {
    std::string label;
    bool transversal = false;
    bool x_axis = false;                          // polynomial inputs only
    std::optional<std::string> branch;            // label of a germ branch
    std::vector<std::pair<std::string, Rat>> contacts; // explicit row
};

struct GermDocument {
    std::optional<std::string> poly;
    std::optional<Germ> abstract;
    std::vector<LambdaSpec> lambdas;
};

GermDocument parse_document(const Json& j);
Json document_json(const Germ& g, const std::vector<LambdaSpec>& lambdas = {});

/// Everything cmd_analyze computes, bundled.
struct Analysis {
    Germ germ;
    std::optional<PolyGerm> poly; // present for polynomial inputs
    EggersTree tree;
    std::vector<std::pair<std::string, PolarReport>> lambda_reports;
    std::optional<VerifyReport> verify;
    bool partial = false;
};

ExternalBranch resolve_lambda(const LambdaSpec& spec, const Germ& g, const PolyGerm* pg);

Analysis analyze_document(const GermDocument& doc, bool with_cross_verify, bool allow_partial);

Json report_json(const Analysis& a);
Json verify_json(const VerifyReport& r);

} // namespace eggers
