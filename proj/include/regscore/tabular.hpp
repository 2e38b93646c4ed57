#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace regscore {

enum class FeatureKind { continuous, categorical };

struct FeatureSchema {
    std::string name;
    FeatureKind kind = FeatureKind::continuous;
    // categorical only; deduplicated, always ends with the "UNK" sentinel
    std::vector<std::string> categories;
};

// One cell of a mixed-type tabular matrix.
struct Cell {
    enum class State { missing, number, category };
    State state = State::missing;
    double number = 0.0;
    std::string category;

    static Cell make_missing() { return {}; }
    static Cell of(double v) { return {State::number, v, {}}; }
    static Cell of(std::string cat) { return {State::category, 0.0, std::move(cat)}; }
    bool is_missing() const { return state == State::missing; }
};

// Feature name -> cell, the deployment-facing row form consumed by score cards.
using RawRow = std::unordered_map<std::string, Cell>;

struct Dataset {
    std::vector<FeatureSchema> schema;
    std::vector<std::vector<Cell>> columns;  // columns[j][p]: feature j, row p
    Eigen::VectorXd target;
    std::string target_name = "y";

    int rows() const { return static_cast<int>(target.size()); }
    int feature_count() const { return static_cast<int>(schema.size()); }
    int feature_index(const std::string& name) const;  // -1 when absent

    RawRow row(int p) const;
    Dataset select_features(const std::vector<std::string>& names) const;
    Dataset subset_rows(std::span<const int> row_indices) const;
};

// Declared column kinds plus the target column name; see docs/schema examples.
struct SchemaSpec {
    std::string target;
    std::vector<FeatureSchema> features;  // categories optional, collected from data when empty

    static SchemaSpec from_json_text(const std::string& text);
    static SchemaSpec from_json_file(const std::string& path);
};

// CSV: header row mandatory, comma-separated, empty string = missing, '.' decimal
// point. Unseen categorical labels map to "UNK".
Dataset load_dataset(std::istream& csv, const SchemaSpec& spec);
Dataset load_dataset_file(const std::string& path, const SchemaSpec& spec);

struct ScalerFeature {
    std::string name;
    double mean = 0.0;
    double std_dev = 1.0;
    bool constant = false;  // std clamped to 1
};

struct ScalerParams {
    std::vector<ScalerFeature> features;           // continuous features, dataset order
    std::string convention = "population";         // divide by n
    const ScalerFeature* find(const std::string& name) const;
};

// Centers/scales continuous features to mean 0, variance 1 over non-missing
// cells (population convention). Categorical columns pass through.
std::pair<Dataset, ScalerParams> standardize(const Dataset& data);
Dataset inverse_standardize(const Dataset& data, const ScalerParams& scaler);

struct FeatureFTest {
    std::string name;
    double pearson_r = 0.0;
    double f_stat = 0.0;
    double p_value = 1.0;
    int n = 0;
    bool kept = false;
    std::string note;  // non-empty when rejected for a degenerate reason
};

struct SelectionResult {
    std::vector<std::string> selected;  // kept feature names in dataset order
    std::vector<FeatureFTest> tests;    // continuous features only
    std::vector<std::string> warnings;
};

// Univariate F-test of each continuous feature against the target;
// keeps p < alpha. Categorical features are always kept.
SelectionResult f_regression_select(const Dataset& data, double alpha);

struct FoldAssignment {
    std::vector<int> fold_of_row;
    int n_folds = 0;
    int strat_bins = 0;
    std::uint64_t seed = 0;

    std::vector<int> fold_rows(int fold) const;
    std::vector<int> complement_rows(int fold) const;
};

// Equal-frequency bins of y, shuffled per bin by seed, dealt round-robin.
FoldAssignment stratified_kfold(const Dataset& data, int n_folds, int strat_bins,
                                std::uint64_t seed);

}  // namespace regscore
