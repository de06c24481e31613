#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rrt/functionals.hpp"
#include "rrt/gem.hpp"
#include "rrt/harris_tree.hpp"
#include "rrt/limit_tree.hpp"
#include "rrt/oracle.hpp"
#include "rrt/rt_algorithm.hpp"

namespace rrt {

//! Shortest decimal text that reads back to the same double.
std::string format_double(double v);

//! A CSV field, quoted when it holds a comma, quote or line break.
std::string csv_field(std::string_view text);
void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

//! replication,n,tpl,hpl,wiener,comparisons
void write_functional_csv(std::ostream& os, std::span<const FunctionalRecord> records);
//! replication,y,z,w,y_plus_z
void write_limit_csv(std::ostream& os, std::span<const SeriesValues> samples);
//! value,numerator,denominator
void write_exact_dist_csv(std::ostream& os, const ExactDist& dist);
//! tpl,hpl,count
void write_joint_table_csv(std::ostream& os, const JointTable& table);

//! Sorted array of word strings.
nlohmann::json tree_to_json(const HarrisTree& x);
HarrisTree tree_from_json(const nlohmann::json& j);
nlohmann::json encoding_to_json(std::span<const std::uint32_t> e);
Encoding encoding_from_json(const nlohmann::json& j);
//! {"masses": [...], "residual": r}
nlohmann::json simplex_to_json(const SimplexVec& s);
//! word -> {tau, kappa, label}
nlohmann::json trace_to_json(const RtTrace& trace);

//! Read a whole text file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace rrt
