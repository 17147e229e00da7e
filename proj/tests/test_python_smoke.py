"""Smoke test for the sunweave Python package."""

import sunweave


def main():
    assert sunweave.u_min(9) == 7
    assert sunweave.u_min(13) == 11
    assert sunweave.sts_order_admissible(15)
    assert not sunweave.sts_order_admissible(11)
    assert sunweave.sun_order_admissible(12)
    assert not sunweave.sun_order_admissible(4)

    sts = sunweave.generate_sts(9)
    assert sts["order"] == 9
    assert len(sts["triples"]) == 12

    cert = sunweave.embed(sts, seed=7)
    assert cert["n"] == 9
    assert cert["u"] == 7
    assert cert["design"]["points"] == 16
    assert len(cert["design"]["blocks"]) == 20
    ok, violations = sunweave.verify_embedding(cert)
    assert ok, violations

    cert["map"][0], cert["map"][1] = cert["map"][1], cert["map"][0]
    ok, violations = sunweave.verify_embedding(cert)
    assert not ok and violations

    design = sunweave.sun_system(9)
    ok, summary = sunweave.verify_design(design)
    assert ok, summary

    design["blocks"].pop()
    ok, summary = sunweave.verify_design(design)
    assert not ok
    assert "uncovered" in summary

    parsed = sunweave.parse_design_text("points 4\npartial\n(0,1,2)\n")
    assert parsed["points"] == 4
    assert parsed["partial"] is True

    both = {v: sunweave.sts13(v) for v in ("cyclic", "noncyclic")}
    assert both["cyclic"]["triples"] != both["noncyclic"]["triples"]
    for variant, system in both.items():
        cert = sunweave.embed(system)
        assert cert["u"] == 11, variant
        ok, violations = sunweave.verify_embedding(cert)
        assert ok, (variant, violations)

    try:
        sunweave.embed({"order": 6, "triples": []})
    except ValueError:
        pass
    else:
        raise AssertionError("inadmissible order accepted")

    print("python smoke: ok")


if __name__ == "__main__":
    main()
