import re
from os import path as osp

from setuptools import find_packages, setup

version_file = 'coopemit/version.py'


def get_version():
    scope = {}
    with open(version_file, 'r') as f:
        exec(compile(f.read(), version_file, 'exec'), scope)
    return scope['__version__']


def parse_requirements(fname='requirements.txt'):
    """Read a requirements file, following ``-r`` includes.

    Args:
        fname (str): Path to the requirements file.

    Returns:
        list[str]: Requirement specifiers with their version bounds.
    """
    if not osp.exists(fname):
        return []
    requirements = []
    with open(fname, 'r') as f:
        for line in f:
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            if line.startswith('-r '):
                requirements.extend(parse_requirements(line.split(' ')[1]))
            else:
                requirements.append(re.sub(r'\s+', '', line))
    return requirements


if __name__ == '__main__':
    setup(
        name='coopemit',
        version=get_version(),
        description=('Collective decay rates, Lamb shifts and emission '
                     'spectra of small arrays of two-level atoms'),
        long_description=open('README.md', encoding='utf-8').read(),
        long_description_content_type='text/markdown',
        author='coopemit contributors',
        keywords='superradiance, subradiance, collective Lamb shift, '
        'spontaneous emission',
        packages=find_packages(exclude=('tests', 'tests.*')),
        include_package_data=True,
        classifiers=[
            'Development Status :: 4 - Beta',
            'License :: OSI Approved :: Apache Software License',
            'Operating System :: OS Independent',
            'Programming Language :: Python :: 3',
            'Topic :: Scientific/Engineering :: Physics',
        ],
        license='Apache License 2.0',
        python_requires='>=3.7',
        install_requires=parse_requirements('requirements/runtime.txt'),
        extras_require={
            'all': parse_requirements('requirements.txt'),
            'tests': parse_requirements('requirements/tests.txt'),
        },
        entry_points={'console_scripts': ['coopemit=coopemit.cli:main']},
        zip_safe=False)
