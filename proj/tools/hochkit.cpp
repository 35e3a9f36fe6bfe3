#include "hochkit/execute.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hochkit - Hochschild cohomology over finite chain rings"};
    std::vector<std::string> files;
    std::string format;
    int jobs = 1;
    app.add_option("specfile", files, "job spec file(s)")->required()->expected(-1);
    app.add_option("--format", format, "output format override: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--jobs", jobs, "run spec files concurrently")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    auto run_one = [&](const std::string& path) -> hochkit::ExecResult {
        std::string text;
        try {
            text = read_file(path);
        } catch (const std::exception& e) {
            return {2, std::string("error: ") + e.what() + "\n"};
        }
        return hochkit::execute_spec_text(text, format);
    };

    int code = 0;
    if (jobs <= 1 || files.size() <= 1) {
        for (const auto& f : files) {
            auto res = run_one(f);
            if (files.size() > 1) std::cout << "== file: " << f << "\n";
            if (res.code == 2) std::cerr << res.text;
            else std::cout << res.text;
            code = std::max(code, res.code);
        }
    } else {
        std::vector<std::future<hochkit::ExecResult>> futs;
        futs.reserve(files.size());
        size_t next = 0;
        std::vector<hochkit::ExecResult> results(files.size());
        while (next < files.size()) {
            size_t batch = std::min(files.size() - next, static_cast<size_t>(jobs));
            futs.clear();
            for (size_t i = 0; i < batch; ++i) {
                const std::string& f = files[next + i];
                futs.push_back(std::async(std::launch::async, run_one, f));
            }
            for (size_t i = 0; i < batch; ++i) results[next + i] = futs[i].get();
            next += batch;
        }
        for (size_t i = 0; i < files.size(); ++i) {
            std::cout << "== file: " << files[i] << "\n";
            if (results[i].code == 2) std::cerr << results[i].text;
            else std::cout << results[i].text;
            code = std::max(code, results[i].code);
        }
    }
    return code;
}
