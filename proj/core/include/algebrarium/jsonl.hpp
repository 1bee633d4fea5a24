#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "algebrarium/response_eval.hpp"
#include "algebrarium/taskgen.hpp"

// Line formats:
//   tasks.jsonl      {task_id, domain, depth, mode, operands:[..], answer, split, prompt}
//   chains.jsonl     {task_id, steps:[{j, left, right, truth, prompt}, ..]}
//   responses.jsonl  {task_id, samples:[..]}
//   estimates.jsonl  {task_id, n, c, p_hat, state}
namespace algebrarium::jsonl {

std::string task_line(const ExpressionTask& t);
/// Parses and re-verifies the stored answer. Throws DataFormat.
ExpressionTask parse_task(std::string_view line);

std::string chain_line(const DecompositionChain& c);
DecompositionChain parse_chain(std::string_view line, DomainId domain);

std::string response_line(const ResponseRecord& r);
ResponseRecord parse_response(std::string_view line);

std::string estimate_line(const InstanceEstimate& e);
InstanceEstimate parse_estimate(std::string_view line);

/// Readers skip blank lines. Errors carry "<path>:<line>"; IoError if the file
/// cannot be opened, DataFormat on a malformed line.
void write_file(const std::filesystem::path& path, const std::vector<std::string>& lines);

std::vector<ExpressionTask> read_tasks(const std::filesystem::path& path);
/// Chains need their task's domain, looked up by id.
std::vector<DecompositionChain> read_chains(const std::filesystem::path& path,
                                            const std::unordered_map<std::string, DomainId>& domains);
std::vector<ResponseRecord> read_responses(const std::filesystem::path& path);
std::vector<InstanceEstimate> read_estimates(const std::filesystem::path& path);

void write_tasks(const std::filesystem::path& path, const std::vector<ExpressionTask>& tasks);
void write_chains(const std::filesystem::path& path, const std::vector<DecompositionChain>& chains);
void write_responses(const std::filesystem::path& path, const std::vector<ResponseRecord>& records);
void write_estimates(const std::filesystem::path& path, const std::vector<InstanceEstimate>& estimates);

}  // namespace algebrarium::jsonl
