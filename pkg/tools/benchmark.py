#!/usr/bin/env python3
"""
psycholex 性能基准

生成合成语料后执行完整流水线，报告耗时与峰值内存。
默认规模: 2 类 x 2500 用户 x 200 文档 = 100 万文档。
"""

import sys
import tempfile
import time
from pathlib import Path

import click

# 添加项目路径
sys.path.insert(0, str(Path(__file__).parent.parent))

from psycholex.common.logging import setup_logging
from psycholex.corpus import SyntheticConfig, write_synthetic
from psycholex.pipeline import AnalysisPipeline, RunConfig


@click.command()
@click.option('--users', type=int, default=2500, show_default=True, help='Users per class')
@click.option('--documents', type=int, default=200, show_default=True, help='Documents per user')
@click.option('--threads', type=int, default=4, show_default=True, help='Worker threads')
@click.option('--keep', type=click.Path(file_okay=False), help='Keep corpus and report in this directory')
def benchmark(users: int, documents: int, threads: int, keep: str) -> None:
    setup_logging("WARNING")
    workdir = Path(keep) if keep else Path(tempfile.mkdtemp(prefix="psycholex-bench-"))
    synthetic = SyntheticConfig(platforms=("twitter",), users_per_class=users,
                                documents_per_user=documents)

    print(f"🧪 Generating {2 * users * documents:,} documents...")
    started = time.perf_counter()
    corpus_path = write_synthetic(synthetic, workdir)["twitter"]
    print(f"✅ Corpus written in {time.perf_counter() - started:.1f}s: {corpus_path}")

    run_config = RunConfig(
        input_path=str(corpus_path),
        cohort_pairs=[(synthetic.positive_label, synthetic.control_label)],
        output_dir=str(workdir / "out"),
        max_workers=threads,
    )
    print("🚀 Running all analyses...")
    started = time.perf_counter()
    result = AnalysisPipeline(run_config).run_and_write()
    elapsed = time.perf_counter() - started

    print("=" * 40)
    print(f"⏱️  Wall time:   {elapsed:.1f}s")
    print(f"📊 Peak RSS:    {result.peak_rss_bytes / 2 ** 20:.0f} MiB")
    print(f"📦 Sections:    {len(result.report.sections)}")
    print(f"📁 Output:      {run_config.output_dir}")


if __name__ == '__main__':
    print("🧪 psycholex benchmark")
    print("=" * 40)
    benchmark()
