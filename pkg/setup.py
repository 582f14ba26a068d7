from setuptools import setup

version = '0.3.0'

setup(
    name='weylkit',
    packages=['weylkit', 'weylkit.utilities'],
    version=version,
    description=("weylkit represents Cartan schemes, generates their Weyl groupoids and root systems with exact "
                 "integer arithmetic and searches for finite Weyl groupoids with few objects."),
    author='The weylkit developers',
    author_email='weylkit@users.noreply.github.com',
    keywords=['cartan scheme', 'weyl groupoid', 'root system', 'classification'],
    license='MIT',
    platforms='any',
    python_requires='>=3.8',
    install_requires=['networkx', 'numpy>=1.13.0', 'pandas>=1.5'],
    extras_require={'test': ['hypothesis', 'pytest']},
    entry_points={'console_scripts': ['weylkit = weylkit.cli:main']},
    classifiers=[]
)
