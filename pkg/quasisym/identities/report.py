'''
Verification reports: one per checked identity, with residuals per degree.
'''
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import List, Optional

SAMPLE_SIZE = 5


@dataclass
class DegreeResidual:
    degree: int
    residual_term_count: int
    sample: List[tuple] = field(default_factory=list)
    key_field: str = 'perm'
    check: Optional[str] = None

    def to_json(self):
        result = {}
        if self.check is not None:
            result['check'] = self.check
        result['degree'] = self.degree
        result['nonzero_terms'] = self.residual_term_count
        result['sample'] = [{self.key_field: key, 'coeff': str(coeff)} for key, coeff in self.sample]
        return result


def element_residual(degree, element, check=None):
    '''A residual entry for a difference element; zero means the check passed.'''
    terms = element.terms()
    return DegreeResidual(
        degree=degree,
        residual_term_count=len(terms),
        sample=[(element.format_key(key), coeff) for key, coeff in terms[:SAMPLE_SIZE]],
        key_field=element.key_field,
        check=check
    )


def failure_residual(degree, failures, check=None, key_field='perm'):
    '''A residual entry from a list of (key, value) failures of a counting check.'''
    return DegreeResidual(
        degree=degree,
        residual_term_count=len(failures),
        sample=list(failures[:SAMPLE_SIZE]),
        key_field=key_field,
        check=check
    )


@dataclass
class VerificationReport:
    identity_name: str
    parameters: dict
    per_degree: List[DegreeResidual] = field(default_factory=list)
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(entry.residual_term_count == 0 for entry in self.per_degree)

    def add(self, entry):
        self.per_degree.append(entry)

    def to_json(self, timing=True):
        result = {
            'identity': self.identity_name,
            'parameters': self.parameters,
            'ok': self.ok,
            'per_degree': [entry.to_json() for entry in self.per_degree],
        }
        if self.notes:
            result['notes'] = self.notes
        if timing:
            result['elapsed_ms'] = int(round(self.elapsed * 1000))
        return result

    def to_text(self, timing=True):
        status = 'OK' if self.ok else 'FAILED'
        params = ' '.join(f'{key}={value}' for key, value in self.parameters.items())
        lines = [f'{self.identity_name} [{params}]: {status}']
        for key, value in self.notes.items():
            lines.append(f'  note {key}: {value}')
        for entry in self.per_degree:
            label = f'{entry.check} ' if entry.check else ''
            line = f'  {label}degree {entry.degree}: {entry.residual_term_count} residual terms'
            if entry.sample:
                line += ' e.g. ' + ', '.join(f'{coeff}*[{key}]' for key, coeff in entry.sample)
            lines.append(line)
        if timing:
            lines.append(f'  elapsed {self.elapsed:.3f}s')
        return '\n'.join(lines)


@contextmanager
def timed(report):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed = time.perf_counter() - start
