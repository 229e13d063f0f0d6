from typing import Optional, Sequence

from .caps import ORACLE_BUDGET, S_CAP, VERIFY_DEGREE_CAP


class Verifier:
    """
    Verifier runs the s <= 2 check over the actions of A_n and S_n on the cosets of
    their maximal subgroups: it builds each action, its orbital digraphs and their
    largest s, and assembles a report.
    """

    from .initializations import \
        init_run,\
        init_catalog,\
        verbosity

    from .verification import \
        build_tasks,\
        verify

    from .reports import \
        violations,\
        summary,\
        conjecture_status,\
        report,\
        save_report,\
        load_report,\
        df_actions,\
        df_orbitals,\
        save_tables

    def __init__(self, n_min: int = 5, n_max: int = 9, group_types: Sequence[str] = ('alt', 'sym'),
                 families: Sequence[str] = ('a', 'b', 'c', 'catalog'), degree_cap: int = VERIFY_DEGREE_CAP,
                 s_cap: int = S_CAP, catalog_path: Optional[str] = None, oracle_budget: int = ORACLE_BUDGET,
                 n_jobs: int = 1, verbose: int = 0):
        from . import __version__
        self.tool_version = __version__
        self.verbose = verbose
        self.start_times = {}
        self.timestamp = None
        self.records, self.rejections, self.exclusions, self.inconsistencies = [], [], [], []
        self.init_run(n_min=n_min, n_max=n_max, group_types=group_types, families=families,
                      degree_cap=degree_cap, s_cap=s_cap, oracle_budget=oracle_budget, n_jobs=n_jobs)
        self.catalog, self.catalog_path, self.catalog_sha256 = [], None, None
        if 'catalog' in self.families:
            self.init_catalog(catalog_path)

    def __str__(self):
        s = f'Verifier n={self.n_range[0]}..{self.n_range[-1]} groups={",".join(self.group_types)} '
        s += f'families={",".join(self.families)} degree_cap={self.degree_cap} s_cap={self.s_cap}\n'
        if self.records:
            summ = self.summary()
            s += f"{summ['actions_checked']} actions, {summ['digraphs_checked']} digraphs, "
            s += f"max s {summ['max_s_observed']}, {len(summ['violations'])} violations\n"
        return s

    def __repr__(self):
        return self.__str__()
