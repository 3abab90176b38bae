#ifndef DFCOST_JSON_IO_HPP_
#define DFCOST_JSON_IO_HPP_

#include <string>

#include "dfcost/analysis.hpp"

namespace dfcost {

std::string analysis_to_json(const AnalysisResult& r);
AnalysisResult analysis_from_json(const std::string& text);

std::string network_to_json(const NetworkResult& r);

std::string analysis_to_csv_header();
std::string analysis_to_csv_row(const AnalysisResult& r);

}  // namespace dfcost

#endif  // DFCOST_JSON_IO_HPP_
