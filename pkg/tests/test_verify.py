from twocayley.verify import verify_table1, verify_table2, verify_table3, verify_table4


def test_table1_rows_pass():
    rows = verify_table1()
    assert len(rows) == 6 and all(r.passed for r in rows)
    assert rows[0].line().startswith("PASS table 1 N=8 [bfs]")


def test_table2_reports_k():
    rows = verify_table2(t_max=2)
    assert len(rows) == 6 and all(r.passed for r in rows)
    assert {r.details["k"] for r in rows} == {1}


def test_table3_skips_large_rows_without_flag():
    rows = verify_table3(max_order=5000, run_search=False)
    statuses = {r.label: r.passed for r in rows}
    assert statuses["N=2176"] is True
    assert statuses["N=21104"] is None
    assert "SKIP" in next(r.line() for r in rows if r.passed is None)


def test_table4_small_params():
    rows = verify_table4(param_max=2)
    assert all(r.passed for r in rows) and all(r.method == "bfs" for r in rows)
