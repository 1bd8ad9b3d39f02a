"""Regenerates the CSV fixtures used by the test suites.

iris.csv    -- Anderson's iris measurements (the copy bundled with scikit-learn).
titanic.csv -- one row per person, expanded from the 4-way Class x Sex x Age x
               Survived contingency table (2201 people).
"""
import csv
import itertools
import pathlib

HERE = pathlib.Path(__file__).resolve().parent


def write_iris():
    from sklearn.datasets import load_iris

    data = load_iris()
    names = ["setosa", "versicolor", "virginica"]
    with open(HERE / "iris.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["Sepal.Length", "Sepal.Width", "Petal.Length", "Petal.Width", "Species"])
        for row, target in zip(data.data, data.target):
            w.writerow([f"{v:g}" for v in row] + [names[target]])


# counts[survived][age][sex] -> per class (1st, 2nd, 3rd, Crew)
TITANIC = {
    ("No", "Child", "Male"): (0, 0, 35, 0),
    ("No", "Child", "Female"): (0, 0, 17, 0),
    ("No", "Adult", "Male"): (118, 154, 387, 670),
    ("No", "Adult", "Female"): (4, 13, 89, 3),
    ("Yes", "Child", "Male"): (5, 11, 13, 0),
    ("Yes", "Child", "Female"): (1, 13, 14, 0),
    ("Yes", "Adult", "Male"): (57, 14, 75, 192),
    ("Yes", "Adult", "Female"): (140, 80, 76, 20),
}
CLASSES = ("1st", "2nd", "3rd", "Crew")


def write_titanic():
    with open(HERE / "titanic.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["Class", "Sex", "Age", "Survived"])
        for cls, sex, age, surv in itertools.product(
            CLASSES, ("Male", "Female"), ("Child", "Adult"), ("No", "Yes")
        ):
            n = TITANIC[(surv, age, sex)][CLASSES.index(cls)]
            for _ in range(n):
                w.writerow([cls, sex, age, surv])


if __name__ == "__main__":
    write_iris()
    write_titanic()
